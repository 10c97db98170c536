// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "liederiv/components.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/library.hpp"
#include "liederiv/theorems.hpp"
#include "liederiv/workspace.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace liederiv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ["
         << o.detail << "; " << seconds_since(t0) << " s]";
    std::cout << line.str() << std::endl;
    if (!o.pass)
        ++failures;
}

GMAlgebra example(const std::string& name) {
    return GMAlgebra(load_example(name).contexts.front().context);
}

bool verified_witness(const FDAlgebra& g, const EndoMap& l, const ProperWitness& w) {
    return is_derivation(g, w.derivation) && is_central_commutator_vanishing(g, w.central) &&
           w.derivation.matrix + w.central.matrix == l.matrix;
}

// Per-context tallies for the fuzzed property criteria.
struct FuzzTally {
    std::size_t contexts = 0, faithful_contexts = 0, lie_maps = 0, der_maps = 0;
    std::size_t roundtrip = 0, commutator = 0, torsion = 0, criteria = 0;
    std::vector<std::string> first_messages;
    void note(std::string msg) {
        if (first_messages.size() < 3)
            first_messages.push_back(std::move(msg));
    }
};

void scan_context(const GeneratedContext& gc, FuzzTally& t) {
    GMAlgebra g(gc.context);
    GmaOracle o(g);
    const Field& f = g.field();
    const Bimodule& M = g.M();
    const bool faithful = o.m_faithful();
    ++t.contexts;
    if (faithful)
        ++t.faithful_contexts;

    for (const EndoMap& l : o.oracle().lie_derivations().basis_maps()) {
        ++t.lie_maps;
        LieComponents c = read_lie_components(g, l);
        if (reconstruct_lie(g, c) != l || !validate_conditions(o, c).all_passed()) {
            ++t.roundtrip;
            t.note(gc.description + ": round trip");
            continue;
        }
        if (faithful) {
            bool vanish = true;
            for (const Vec& x : o.commutators_a().basis_vectors())
                vanish = vanish && is_zero(c.h_A.apply(x));
            for (const Vec& y : o.commutators_b().basis_vectors())
                vanish = vanish && is_zero(c.h_B.apply(y));
            if (!vanish) {
                ++t.commutator;
                t.note(gc.description + ": h on commutators");
            }
        }
        for (std::size_t i = 0; i < M.dim(); ++i)
            for (std::size_t j = 0; j < g.N().dim(); ++j) {
                Vec m = M.basis_vector(i), n = g.N().basis_vector(j);
                Vec lhs = M.act_left(c.h_B.apply(gc.context.pair_nm(n, m)), m);
                Vec rhs = M.act_right(m, c.h_A.apply(gc.context.pair_mn(m, n)));
                if (f.reduce(lhs) != f.reduce(rhs)) {
                    ++t.torsion;
                    t.note(gc.description + ": torsion identity");
                }
            }
        if (faithful) {
            const bool oracle = o.oracle().is_proper(l).proper;
            CriteriaReport r = properness_criteria(o, l, c);
            const bool agree = r.verdict == (oracle ? Verdict::Proper : Verdict::NotProper);
            if (!agree) {
                ++t.criteria;
                t.note(gc.description + ": criteria " + to_string(r.verdict));
            }
        }
    }
    for (const EndoMap& d : o.oracle().derivations().basis_maps()) {
        ++t.der_maps;
        DerComponents c = extract_der_components(o, d);
        LieComponents lc = read_lie_components(g, d);
        if (reconstruct_der(g, c) != d || !validate_conditions(o, c).all_passed() ||
            !lc.h_A.is_zero() || !lc.h_B.is_zero()) {
            ++t.roundtrip;
            t.note(gc.description + ": derivation presentation");
        }
    }
}

std::string messages(const FuzzTally& t) {
    std::string out;
    for (const auto& m : t.first_messages)
        out += "; " + m;
    return out;
}

} // namespace

int main() {
    report(1, "example map is a non-proper Lie derivation", [] {
        const auto t0 = Clock::now();
        Workspace ws = load_example("example_sec4");
        GMAlgebra g(ws.context("G").context);
        EndoMap l = ws.map("L_nonproper").map;
        LieOracle o(g.algebra());
        const bool member = o.lie_derivations().contains(l) && is_lie_derivation(g.algebra(), l);
        const bool proper = o.is_proper(l).proper;
        const double s = seconds_since(t0);
        std::ostringstream d;
        d << "member " << member << ", proper " << proper << ", dim G " << g.dim();
        return Outcome{member && !proper && g.dim() == 10 && s < 5.0, d.str()};
    });

    report(2, "example structure facts", [] {
        GMAlgebra g = example("example_sec4");
        GmaOracle o(g);
        const CenterAnalysis& c = o.centers();
        StructureReport sa = analyze_structure(g.A());
        LieComponents lc = extract_lie_components(o, EndoMap{example_sec4_map()});
        const Field& f = g.field();
        const Vec a0 = f.unit_vector(2, 1), b0 = f.unit_vector(2, 1);
        const bool h_ok = lc.h_A.apply(a0) == b0 && lc.h_B.apply(b0) == a0;
        bool image_inside = true;
        for (std::size_t i = 0; i < 2; ++i)
            image_inside = image_inside && c.pi_b_z.contains(lc.h_A.apply(f.unit_vector(2, i)));
        std::ostringstream d;
        d << "Z(G) " << c.z_g.dim() << ", pi_A(Z(G)) " << c.pi_a_z.dim() << ", Z(A) "
          << o.center_a().dim() << ", W_A " << sa.w_closure.dim() << ", h swaps " << h_ok;
        const bool pass = c.z_g.dim() == 1 && c.pi_a_z.dim() == 1 && o.center_a().dim() == 2 &&
                          sa.w_is_whole == TriState::Fails && h_ok && !image_inside;
        return Outcome{pass, d.str()};
    });

    report(3, "a checker holds on each desk example and the oracle confirms", [] {
        const auto t0 = Clock::now();
        std::ostringstream d;
        bool pass = true;
        for (const char* name : {"tri2_Q", "tri2_GF5", "mat2_GF3_peirce", "mat3_GF3_peirce"}) {
            GMAlgebra g = example(name);
            TheoremSuite suite(g);
            std::string holding;
            for (const TheoremVerdict& v : suite.all())
                if (v.overall == TriState::Holds)
                    holding += std::string(holding.empty() ? "" : "+") + to_string(v.id);
            const LieOracle& o = suite.oracle().oracle();
            bool witnesses = true;
            for (const EndoMap& l : o.lie_derivations().basis_maps()) {
                ProperDecision pd = o.is_proper(l);
                witnesses = witnesses && pd.proper && pd.witness &&
                            verified_witness(g.algebra(), l, *pd.witness);
            }
            const bool ok = !holding.empty() && suite.lie_property() && witnesses;
            pass = pass && ok;
            d << name << ": " << (holding.empty() ? "none" : holding) << (ok ? "" : " (bad)") << "; ";
        }
        const double s = seconds_since(t0);
        d << "total " << s << " s";
        return Outcome{pass && s < 30.0, d.str()};
    });

    report(4, "derivation space dimensions of M_2 and M_3 over GF(3)", [] {
        const std::size_t d2 = derivation_space(*matrix_algebra(Field::prime(3), 2)).dim();
        const std::size_t d3 = derivation_space(*matrix_algebra(Field::prime(3), 3)).dim();
        return Outcome{d2 == 3 && d3 == 8,
                       "dim " + std::to_string(d2) + " and " + std::to_string(d3)};
    });

    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.count = 200;
    cfg.max_block_dim = 2;
    cfg.fields = {Field::prime(3), Field::prime(5)};
    FuzzTally tally;
    std::string scan_error;
    const auto scan_start = Clock::now();
    for (std::size_t i = 0; i < cfg.count; ++i) {
        GeneratedContext gc = generate_context(cfg, i);
        try {
            scan_context(gc, tally);
        } catch (const std::exception& e) {
            ++tally.roundtrip;
            if (scan_error.empty())
                scan_error = gc.description + ": " + e.what();
        }
    }
    const double scan_seconds = seconds_since(scan_start);

    report(5, "presentation round trip on 200 fuzzed contexts", [&] {
        std::ostringstream d;
        d << tally.contexts << " contexts, " << tally.lie_maps << " Lie and " << tally.der_maps
          << " derivation basis maps, " << tally.roundtrip << " failures, " << scan_seconds
          << " s scan" << (scan_error.empty() ? "" : "; " + scan_error) << messages(tally);
        return Outcome{tally.roundtrip == 0 && tally.contexts == cfg.count, d.str()};
    });

    report(6, "h vanishes on commutators when M is faithful", [&] {
        std::ostringstream d;
        d << tally.faithful_contexts << " faithful contexts, " << tally.commutator << " failures";
        return Outcome{tally.commutator == 0 && tally.faithful_contexts > 0, d.str()};
    });

    report(7, "torsion identity on extracted components", [&] {
        return Outcome{tally.torsion == 0, std::to_string(tally.torsion) + " failures"};
    });

    report(8, "criteria agree with the oracle when M is faithful", [&] {
        return Outcome{tally.criteria == 0, std::to_string(tally.criteria) + " mismatches"};
    });

    report(9, "fuzz soundness on 100 contexts", [] {
        const auto t0 = Clock::now();
        FuzzConfig c;
        c.seed = 1;
        c.count = 100;
        c.properties = false;
        FuzzReport r = fuzz(c);
        std::size_t holds = 0, without_property = 0;
        for (const FuzzCase& fc : r.cases) {
            if (!fc.lie_property)
                ++without_property;
            for (const auto& [id, v] : fc.verdicts)
                if (v == TriState::Holds) {
                    ++holds;
                    break;
                }
        }
        const double s = seconds_since(t0);
        std::ostringstream d;
        d << r.cases.size() << " contexts, " << holds << " with a holding checker, "
          << without_property << " without the property, " << r.violations.size()
          << " violations";
        return Outcome{r.violations.empty() && r.cases.size() == 100 && s < 300.0, d.str()};
    });

    return failures == 0 ? 0 : 1;
}
