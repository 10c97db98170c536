#include "liederiv/errors.hpp"
#include "liederiv/library.hpp"
#include "liederiv/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace liederiv;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kConsistency = 3 };

struct Options {
    std::string input;
    std::string context;
    std::string map;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::uint64_t budget = kDefaultBudget;
    std::string fields = "GF(3),GF(5)";
    std::size_t max_dim = 2;
    bool zero_pairings = false;
    bool no_properties = false;
    std::string example;
};

void emit(const Json& j, const Options& o) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << render_text(j);
}

std::vector<Field> parse_fields(const std::string& list) {
    std::vector<Field> out;
    std::stringstream ss(list);
    std::string item;
    // GF(p) contains no commas, so a plain split is enough.
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(Field::parse(item));
    return out;
}

int run(const std::string& command, const Options& o) {
    if (command == "examples") {
        if (o.example.empty()) {
            emit(examples_report(), o);
        } else {
            std::cout << emit_workspace(load_example(o.example));
        }
        return kOk;
    }
    if (command == "fuzz") {
        FuzzConfig cfg;
        cfg.seed = o.seed;
        cfg.count = o.count;
        cfg.budget = o.budget;
        cfg.max_block_dim = o.max_dim;
        cfg.fields = parse_fields(o.fields);
        cfg.zero_pairings_only = o.zero_pairings;
        cfg.properties = !o.no_properties;
        FuzzReport r = fuzz(cfg);
        emit(to_json(r), o);
        return r.violations.empty() && r.property_failures == 0 ? kOk : kConsistency;
    }

    Workspace ws = load_workspace(o.input);
    if (command == "validate") {
        emit(validate_report(ws), o);
        return kOk;
    }
    if (command == "analyze") {
        emit(analyze_report(ws, o.context, o.budget), o);
        return kOk;
    }
    if (command == "proper") {
        emit(proper_report(ws, o.context, o.map, o.budget), o);
        return kOk;
    }
    if (command == "theorems") {
        bool mismatch = false;
        Json j = theorems_report(ws, o.context, o.budget, mismatch);
        emit(j, o);
        return mismatch ? kConsistency : kOk;
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie derivations of generalized matrix algebras over Q and GF(p)"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", o.input, "workspace JSON file or bundled example name");
        if (needs_input)
            in->required();
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--budget", o.budget, "enumeration budget for exhaustive scans");
    };

    auto* validate = app.add_subcommand("validate", "load and validate every object");
    add_common(validate, true);

    auto* analyze = app.add_subcommand("analyze", "structure, centers and derivation spaces");
    add_common(analyze, true);
    analyze->add_option("--context", o.context, "context to analyze (default: all)");

    auto* proper = app.add_subcommand("proper", "decide properness of Lie derivations");
    add_common(proper, true);
    proper->add_option("--context", o.context, "restrict to maps on this context");
    proper->add_option("--map", o.map, "map to test (default: every map)");

    auto* theorems = app.add_subcommand("theorems", "run the theorem checkers against the oracle");
    add_common(theorems, true);
    theorems->add_option("--context", o.context, "context to check (default: all)");

    auto* fz = app.add_subcommand("fuzz", "search random Morita contexts for counterexamples");
    fz->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    fz->add_option("--budget", o.budget, "enumeration budget for exhaustive scans");
    fz->add_option("--seed", o.seed, "stream seed");
    fz->add_option("--count", o.count, "number of contexts");
    fz->add_option("--fields", o.fields, "comma separated prime fields, e.g. GF(3),GF(5)");
    fz->add_option("--max-dim", o.max_dim, "largest block dimension (1 or 2)");
    fz->add_flag("--zero-pairings", o.zero_pairings, "generate trivial contexts only");
    fz->add_flag("--no-properties", o.no_properties, "skip the component property checks");

    auto* ex = app.add_subcommand("examples", "list bundled examples or print one as JSON");
    ex->add_option("name", o.example, "example to print");
    ex->add_option("--format", o.format, "output format for the listing")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o);
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kConsistency;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        for (std::size_t i = 1; i < e.failures().size() && i < 10; ++i)
            std::cerr << "  also: " << e.failures()[i] << "\n";
        return kValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
}
