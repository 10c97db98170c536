#include "helpers.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/report.hpp"

#include <doctest.h>

#include <string>

using namespace liederiv;
using namespace testing;

namespace {

const char* kScalarWorkspace = R"js({
  "field": "Q",
  "algebras": [
    {"name": "F", "dim": 1, "structure": [[["2/2"]]], "unit": ["2/4"]}
  ]
})js";

std::string error_of(const std::string& text) {
    try {
        parse_workspace(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("fractions are reduced on load") {
    Field q = Field::rationals();
    CHECK(q.parse_scalar("2/4") == Scalar(1, 2));
    // unit 1/2 is not a unit for the product 1*1 = 1.
    CHECK_THROWS_AS(parse_workspace(kScalarWorkspace), ValidationError);
    std::string ok = kScalarWorkspace;
    ok.replace(ok.find("\"2/4\""), 5, "\"4/4\"");
    Workspace ws = parse_workspace(ok);
    CHECK(ws.algebra("F").algebra->unit() == vec({1}));
}

TEST_CASE("prime field scalars are reduced") {
    Workspace ws = parse_workspace(R"js({"field": "GF(5)", "algebras": [
        {"name": "F", "dim": 1, "structure": [[[6]]], "unit": [-4]}]})js");
    CHECK(ws.field == Field::prime(5));
    CHECK(ws.algebra("F").algebra->unit() == vec({1}));
}

TEST_CASE("malformed input reports where") {
    CHECK(error_of("{\n  \"field\": \"Q\",\n  oops\n}").find("line") != std::string::npos);
    std::string missing = error_of(R"js({"field": "Q", "algebras": [{"name": "F", "dim": 1, "unit": [1]}]})js");
    CHECK(missing.find("algebras[0]") != std::string::npos);
    CHECK(missing.find("structure") != std::string::npos);
    std::string shape = error_of(R"js({"field": "Q", "algebras": [
        {"name": "F", "dim": 1, "structure": [[[1, 0]]], "unit": [1]}]})js");
    CHECK(shape.find("algebras[0].structure") != std::string::npos);
    CHECK(error_of(R"js({"field": "GF(4)"})js").find("GF(p)") != std::string::npos);
}

TEST_CASE("non-associative algebra is rejected by name with the triple") {
    std::string text = R"js({"field": "Q", "algebras": [{"name": "bad", "dim": 3,
        "structure": [[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[0,0,1],[0,0,0]], [[0,0,1],[0,1,0],[0,0,0]]],
        "unit": [1,0,0]}]})js";
    try {
        parse_workspace(text);
        FAIL("accepted a non-associative algebra");
    } catch (const ValidationError& e) {
        std::string what = e.what();
        CHECK(what.find("bad") != std::string::npos);
        CHECK(what.find("(i,j,k)") != std::string::npos);
    }
}

TEST_CASE("corrupted pairing is rejected by context name") {
    Workspace ws = load_example("mat2_GF3_peirce");
    Json j = Json::parse(emit_workspace(ws));
    for (auto& plane : j["contexts"][0]["phi"])
        for (auto& row : plane)
            for (auto& x : row)
                x = 2 * x.get<int>();
    try {
        parse_workspace(j.dump());
        FAIL("accepted a corrupted pairing");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("peirce") != std::string::npos);
    }
}

TEST_CASE("unknown names and files") {
    Workspace ws = load_example("example_sec4");
    CHECK_THROWS_AS(ws.context("nope"), InputError);
    CHECK_THROWS_AS(ws.map("nope"), InputError);
    CHECK_THROWS_AS(load_workspace("/nonexistent/file.json"), InputError);
    CHECK_THROWS_AS(load_example("nope"), InputError);
}

TEST_CASE("emission round trips and is deterministic") {
    for (const auto& name : example_names()) {
        Workspace ws = load_example(name);
        std::string once = emit_workspace(ws);
        std::string twice = emit_workspace(parse_workspace(once));
        CHECK(once == twice);
        CHECK(once == emit_workspace(load_example(name)));
    }
}

TEST_CASE("reports are deterministic") {
    Workspace ws = load_example("tri2_GF5");
    CHECK(analyze_report(ws, "", kDefaultBudget).dump() ==
          analyze_report(ws, "", kDefaultBudget).dump());
    bool m1 = false, m2 = false;
    CHECK(theorems_report(ws, "", kDefaultBudget, m1).dump() ==
          theorems_report(ws, "", kDefaultBudget, m2).dump());
    CHECK_FALSE(m1);
}

TEST_CASE("proper report for the example map") {
    Workspace ws = load_example("example_sec4");
    Json r = proper_report(ws, "", "L_nonproper", kDefaultBudget);
    REQUIRE(r["results"].size() == 1);
    CHECK(r["results"][0]["verdict"] == "NotProper");
    CHECK(r["results"][0]["lie_derivation"] == true);
    CHECK(r["results"][0]["criteria"]["verdict"] == "NotProper");
}

TEST_CASE("analyze report lists the example's structure") {
    Workspace ws = load_example("example_sec4");
    Json r = analyze_report(ws, "G", kDefaultBudget);
    const Json& c = r["contexts"][0];
    CHECK(c["trivial"] == true);
    CHECK(c["spaces"]["lie_derivation_property"] == false);
    std::string text = render_text(r);
    CHECK(text.find("lie_derivation_property: false") != std::string::npos);
}

TEST_CASE("validate report and example listing") {
    Json v = validate_report(load_example("mat3_GF3_peirce"));
    CHECK_FALSE(v.empty());
    Json e = examples_report();
    CHECK(e["examples"].size() == example_names().size());
}

}
