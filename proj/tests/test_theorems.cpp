#include "helpers.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/theorems.hpp"

#include <doctest.h>

using namespace liederiv;
using namespace testing;

namespace {

TriState hyp(const TheoremVerdict& v, const std::string& name) {
    const Hypothesis* h = v.find(name);
    REQUIRE_MESSAGE(h, "missing hypothesis " << name);
    return h->value;
}

} // namespace

TEST_SUITE("theorems") {

TEST_CASE("central-ideal theorem") {
    TheoremVerdict m3 = check_du_wang(example_gma("mat3_GF3_peirce"));
    CHECK(m3.overall == TriState::Holds);
    REQUIRE(m3.oracle_agrees);
    CHECK(*m3.oracle_agrees);

    // Commutative scalar blocks: only the central-ideal clause fails.
    for (const char* name : {"tri2_Q", "mat2_GF3_peirce"}) {
        TheoremVerdict v = check_du_wang(example_gma(name));
        CHECK(v.overall == TriState::Fails);
        CHECK(hyp(v, "M faithful") == TriState::Holds);
        CHECK(hyp(v, "pi_A(Z(G)) = Z(A)") == TriState::Holds);
        CHECK(hyp(v, "pi_B(Z(G)) = Z(B)") == TriState::Holds);
        CHECK(hyp(v, "A or B central-ideal free") == TriState::Fails);
        CHECK_FALSE(v.oracle_agrees);
    }

    TheoremVerdict s = check_du_wang(example_gma("example_sec4"));
    CHECK(s.overall == TriState::Fails);
    CHECK(hyp(s, "pi_A(Z(G)) = Z(A)") == TriState::Fails);
    CHECK(hyp(s, "A or B central-ideal free") == TriState::Fails);
}

TEST_CASE("domain theorem") {
    for (const char* name : {"tri2_Q", "mat2_GF3_peirce"}) {
        TheoremVerdict v = check_domain_theorem(example_gma(name));
        CHECK(v.overall == TriState::Holds);
        REQUIRE(v.oracle_agrees);
        CHECK(*v.oracle_agrees);
    }
    TheoremVerdict s = check_domain_theorem(example_gma("example_sec4"));
    CHECK(s.overall == TriState::Fails);
    CHECK(hyp(s, "A is a domain") == TriState::Fails);
}

TEST_CASE("strong faithfulness theorem") {
    TheoremVerdict t = check_strong_faithful_theorem(example_gma("tri2_GF5"));
    CHECK(t.overall == TriState::Holds);
    CHECK(hyp(t, "M strongly faithful") == TriState::Holds);
    TheoremVerdict s = check_strong_faithful_theorem(example_gma("example_sec4"));
    CHECK(s.overall == TriState::Fails);
    CHECK(hyp(s, "M strongly faithful") == TriState::Fails);
}

TEST_CASE("unknown hypotheses never upgrade to holds") {
    // A 2-dim field acting on itself: no basis product vanishes, so only a
    // scan can settle strong faithfulness, and a budget of one cannot.
    Field f = Field::prime(5);
    auto k = quadratic_algebra(f, Scalar(2));
    GMAlgebra g(make_trivial_context(k, k, twisted_module_ab(k, k, Matrix::identity(f, 2)),
                                     Bimodule::zero(k, k)));
    CHECK(check_strong_faithful_theorem(g).overall == TriState::Holds);
    TheoremOptions tiny;
    tiny.budget = 1;
    TheoremVerdict v = check_strong_faithful_theorem(g, tiny);
    CHECK(hyp(v, "M strongly faithful") == TriState::Unknown);
    CHECK(v.overall != TriState::Holds);
    CHECK_FALSE(v.oracle_agrees);
}

TEST_CASE("main theorem") {
    TheoremVerdict m3 = check_main(example_gma("mat3_GF3_peirce"));
    CHECK(m3.overall == TriState::Holds);
    CHECK(hyp(m3, "(I) W_A = A and M faithful left A-module") == TriState::Holds);
    CHECK(hyp(m3, "(III)(i) A or B central-ideal free") == TriState::Holds);
    REQUIRE(m3.oracle_agrees);
    CHECK(*m3.oracle_agrees);

    TheoremVerdict s = check_main(example_gma("example_sec4"));
    CHECK(s.overall == TriState::Fails);
    CHECK(hyp(s, "(I)") == TriState::Fails);
    CHECK(hyp(s, "(I) pi_B(Z(G)) = Z(B) and M faithful left A-module") == TriState::Fails);
    CHECK(hyp(s, "(I) W_A = A and M faithful left A-module") == TriState::Fails);
    CHECK(hyp(s, "(I) A has the Lie derivation property and W_A = A") == TriState::Fails);

    TheoremVerdict t = check_main(example_gma("tri2_Q"));
    CHECK(t.overall == TriState::Holds);
    CHECK(hyp(t, "(III)(ii) A and B are domains") == TriState::Holds);
}

TEST_CASE("trivial corollary") {
    GMAlgebra s = example_gma("example_sec4");
    TheoremVerdict v = check_trivial_corollary(s);
    CHECK(v.overall == TriState::Fails);
    CHECK(hyp(v, "(I)") == TriState::Fails);
    CHECK(hyp(v, "(II)") == TriState::Fails);
    CHECK_FALSE(TheoremSuite(s).lie_property());

    for (const char* name : {"tri2_Q", "trivial_QQQ"}) {
        TheoremVerdict t = check_trivial_corollary(example_gma(name));
        CHECK(t.overall == TriState::Holds);
        REQUIRE(t.oracle_agrees);
        CHECK(*t.oracle_agrees);
    }
    CHECK_THROWS_AS(check_trivial_corollary(example_gma("mat2_GF3_peirce")), PreconditionError);
}

TEST_CASE("direct sums are reported unknown") {
    Field q = Field::rationals();
    auto f = scalar_algebra(q);
    GMAlgebra g(make_trivial_context(f, f, Bimodule::zero(f, f), Bimodule::zero(f, f)));
    CHECK(g.is_direct_sum());
    for (const TheoremVerdict& v : TheoremSuite(g).all()) {
        CHECK(v.overall == TriState::Unknown);
        CHECK_FALSE(v.notes.empty());
    }
}

TEST_CASE("property tallies are clean on the examples") {
    for (const auto& name : example_names()) {
        GMAlgebra g = example_gma(name);
        PropertyTally t = check_properties(GmaOracle(g));
        CHECK_MESSAGE(t.total_failures() == 0, name);
        CHECK(t.lie_basis > 0);
    }
}

TEST_CASE("fuzz generation is reproducible") {
    FuzzConfig cfg;
    cfg.seed = 42;
    for (std::size_t i = 0; i < 20; ++i) {
        GeneratedContext a = generate_context(cfg, i), b = generate_context(cfg, i);
        CHECK(a.description == b.description);
        CHECK(a.context.M.left_action() == b.context.M.left_action());
        CHECK(a.context.phi == b.context.phi);
        CHECK(a.context.psi == b.context.psi);
    }
    FuzzConfig other = cfg;
    other.seed = 43;
    bool differs = false;
    for (std::size_t i = 0; i < 20; ++i)
        differs = differs || generate_context(cfg, i).description != generate_context(other, i).description;
    CHECK(differs);
}

TEST_CASE("fuzz rejects characteristic two") {
    FuzzConfig cfg;
    cfg.fields = {Field::prime(2)};
    CHECK_THROWS_AS(generate_context(cfg, 0), TorsionError);
    CHECK_THROWS_AS(fuzz(cfg), TorsionError);
}

TEST_CASE("zero pairing fuzzing stays on the trivial path") {
    FuzzConfig cfg;
    cfg.count = 15;
    cfg.zero_pairings_only = true;
    FuzzReport r = fuzz(cfg);
    CHECK(r.cases.size() == 15);
    for (const FuzzCase& c : r.cases) {
        CHECK(c.trivial);
        bool has_corollary = false;
        for (const auto& [id, verdict] : c.verdicts)
            has_corollary = has_corollary || id == TheoremId::TrivialCorollary;
        CHECK(has_corollary);
    }
    CHECK(r.violations.empty());
}

TEST_CASE("small fuzz run is sound and deterministic") {
    FuzzConfig cfg;
    cfg.count = 25;
    cfg.seed = 5;
    FuzzReport a = fuzz(cfg), b = fuzz(cfg);
    CHECK(a.violations.empty());
    CHECK(a.property_failures == 0);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].index == i);
        CHECK(a.cases[i].description == b.cases[i].description);
        CHECK(a.cases[i].lie_dim == b.cases[i].lie_dim);
    }
}

}
