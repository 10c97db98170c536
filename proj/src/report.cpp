#include "liederiv/report.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/library.hpp"

#include <sstream>

namespace liederiv {

Json to_json(const Scalar& s) {
    if (s.get_den() == 1 && s.get_num().fits_slong_p())
        return s.get_num().get_si();
    return to_string(s);
}

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& s : v)
        a.push_back(to_json(s));
    return a;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(to_json(m.row(r)));
    return rows;
}

Json to_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    j["basis"] = to_json(s.basis());
    return j;
}

Json to_json(const StructureReport& r) {
    Json j;
    j["center"] = to_json(r.center);
    j["commutator_span"] = to_json(r.commutator_span);
    j["central_ideal_free"] = r.central_ideal_free;
    if (r.central_ideal_witness)
        j["central_ideal_witness"] = to_json(*r.central_ideal_witness);
    j["domain"] = to_string(r.domain);
    Json ids = Json::array();
    for (const auto& e : r.idempotents.elements)
        ids.push_back(to_json(e));
    j["idempotents"] = {{"count", r.idempotents.elements.size()},
                        {"complete", r.idempotents.complete},
                        {"elements", ids}};
    j["w_closure"] = to_json(r.w_closure);
    j["w_is_whole"] = to_string(r.w_is_whole);
    return j;
}

Json to_json(const CenterAnalysis& c) {
    Json j;
    j["z_g"] = to_json(c.z_g);
    j["pi_a_z"] = to_json(c.pi_a_z);
    j["pi_b_z"] = to_json(c.pi_b_z);
    j["pi_a_eq_za"] = c.pi_a_eq_za;
    j["pi_b_eq_zb"] = c.pi_b_eq_zb;
    j["phi"] = c.phi_iso ? to_json(*c.phi_iso) : Json(nullptr);
    return j;
}

Json to_json(const FaithfulnessReport& f) {
    Json j;
    j["left_faithful"] = f.left_faithful;
    j["right_faithful"] = f.right_faithful;
    j["strongly_faithful"] = to_string(f.strongly_faithful);
    j["two_torsion_free"] = f.two_torsion_free;
    return j;
}

Json to_json(const LieComponents& c) {
    Json j;
    j["P"] = to_json(c.P);
    j["Q"] = to_json(c.Q);
    j["f"] = to_json(c.f);
    j["g"] = to_json(c.g);
    j["h_A"] = to_json(c.h_A);
    j["h_B"] = to_json(c.h_B);
    j["m0"] = to_json(c.m0);
    j["n0"] = to_json(c.n0);
    return j;
}

Json to_json(const ConditionReport& r) {
    Json a = Json::array();
    for (const auto& c : r.checks) {
        Json j;
        j["condition"] = c.name;
        j["passed"] = c.passed;
        if (!c.failures.empty())
            j["failures"] = c.failures;
        a.push_back(std::move(j));
    }
    return a;
}

Json to_json(const CriteriaReport& r) {
    Json j;
    j["necessary"] = to_json(r.necessary);
    if (r.theorem)
        j["sufficient"] = to_json(*r.theorem);
    j["m_faithful"] = r.m_faithful;
    j["verdict"] = to_string(r.verdict);
    j["oracle_proper"] = r.oracle_proper;
    j["oracle_agrees"] = r.oracle_agrees;
    return j;
}

Json to_json(const TheoremVerdict& v) {
    Json j;
    j["theorem"] = to_string(v.id);
    Json hyps = Json::array();
    for (const auto& h : v.hypotheses)
        hyps.push_back({{"name", h.name}, {"value", to_string(h.value)}});
    j["hypotheses"] = std::move(hyps);
    j["overall"] = to_string(v.overall);
    j["oracle_agrees"] = v.oracle_agrees ? Json(*v.oracle_agrees) : Json(nullptr);
    if (!v.notes.empty())
        j["notes"] = v.notes;
    return j;
}

Json to_json(const PropertyTally& t) {
    Json j;
    j["lie_basis"] = t.lie_basis;
    j["der_basis"] = t.der_basis;
    j["roundtrip_failures"] = t.roundtrip_failures;
    j["der_failures"] = t.der_failures;
    j["commutator_failures"] = t.commutator_failures;
    j["torsion_failures"] = t.torsion_failures;
    j["criteria_mismatches"] = t.criteria_mismatches;
    if (!t.messages.empty())
        j["messages"] = t.messages;
    return j;
}

Json to_json(const FuzzReport& r) {
    Json j;
    Json fields = Json::array();
    for (const auto& f : r.config.fields)
        fields.push_back(f.name());
    j["config"] = {{"seed", r.config.seed},
                   {"count", r.config.count},
                   {"max_block_dim", r.config.max_block_dim},
                   {"fields", fields},
                   {"budget", r.config.budget},
                   {"zero_pairings_only", r.config.zero_pairings_only}};
    j["summary"] = {{"contexts", r.cases.size()},
                    {"soundness_violations", r.violations.size()},
                    {"completeness_gaps", r.completeness_gaps.size()},
                    {"property_failures", r.property_failures}};
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["index"] = c.index;
        cj["description"] = c.description;
        cj["dims"] = {c.dims.dim_a, c.dims.dim_m, c.dims.dim_n, c.dims.dim_b};
        cj["trivial"] = c.trivial;
        cj["m_faithful"] = c.m_faithful;
        cj["lie_property"] = c.lie_property;
        cj["lie_dim"] = c.lie_dim;
        cj["proper_dim"] = c.proper_dim;
        Json verdicts;
        for (const auto& [id, t] : c.verdicts)
            verdicts[to_string(id)] = to_string(t);
        cj["verdicts"] = std::move(verdicts);
        if (c.properties)
            cj["properties"] = to_json(*c.properties);
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    Json viol = Json::array();
    for (const auto& v : r.violations)
        viol.push_back({{"index", v.index},
                        {"theorem", to_string(v.theorem)},
                        {"description", v.description},
                        {"witness", to_json(v.witness.matrix)}});
    j["soundness_violations"] = std::move(viol);
    j["completeness_gaps"] = r.completeness_gaps;
    return j;
}

namespace {

std::vector<const NamedContext*> select_contexts(const Workspace& ws, const std::string& name) {
    std::vector<const NamedContext*> out;
    if (!name.empty()) {
        out.push_back(&ws.context(name));
        return out;
    }
    for (const auto& c : ws.contexts)
        out.push_back(&c);
    return out;
}

Json dims_json(const GMAlgebra& g) {
    const BlockIndex& b = g.blocks();
    return {{"A", b.dim_a}, {"M", b.dim_m}, {"N", b.dim_n}, {"B", b.dim_b}, {"G", b.total()}};
}

Json space_dims(const LieOracle& o) {
    return {{"derivations", o.derivations().dim()},
            {"lie_derivations", o.lie_derivations().dim()},
            {"tau_maps", o.tau_maps().dim()},
            {"proper", o.proper_maps().dim()},
            {"lie_derivation_property", o.has_lie_derivation_property()}};
}

Json witness_json(const ProperDecision& d) {
    if (!d.witness)
        return nullptr;
    return {{"derivation", to_json(d.witness->derivation.matrix)},
            {"central", to_json(d.witness->central.matrix)}};
}

} // namespace

Json validate_report(const Workspace& ws) {
    Json j;
    j["field"] = ws.field.name();
    Json algebras = Json::array();
    for (const auto& a : ws.algebras)
        algebras.push_back({{"name", a.name}, {"dim", a.algebra->dim()}, {"valid", true}});
    j["algebras"] = std::move(algebras);
    Json bimodules = Json::array();
    for (const auto& b : ws.bimodules) {
        ValidationReport rep = validate_bimodule(*b.module);
        if (!rep.ok())
            throw ValidationError("bimodule '" + b.name + "': " + rep.failures.front(),
                                  rep.failures);
        bimodules.push_back({{"name", b.name}, {"dim", b.module->dim()}, {"valid", true}});
    }
    j["bimodules"] = std::move(bimodules);
    Json contexts = Json::array();
    for (const auto& c : ws.contexts) {
        GMAlgebra g(c.context);
        contexts.push_back({{"name", c.name},
                            {"dims", dims_json(g)},
                            {"trivial", is_trivial(c.context)},
                            {"direct_sum", g.is_direct_sum()},
                            {"valid", true}});
    }
    j["contexts"] = std::move(contexts);
    Json maps = Json::array();
    for (const auto& m : ws.maps) {
        bool lie;
        if (ws.has_context(m.target))
            lie = is_lie_derivation(GMAlgebra(ws.context(m.target).context).algebra(), m.map);
        else
            lie = is_lie_derivation(*ws.algebra(m.target).algebra, m.map);
        maps.push_back({{"name", m.name}, {"target", m.target}, {"lie_derivation", lie}});
    }
    j["maps"] = std::move(maps);
    j["status"] = "ok";
    return j;
}

Json analyze_report(const Workspace& ws, const std::string& context, std::uint64_t budget) {
    Json j;
    j["field"] = ws.field.name();
    Json algebras = Json::array();
    if (context.empty()) {
        for (const auto& a : ws.algebras) {
            Json aj;
            aj["name"] = a.name;
            aj["dim"] = a.algebra->dim();
            aj["structure"] = to_json(analyze_structure(*a.algebra, budget));
            aj["spaces"] = space_dims(LieOracle(*a.algebra));
            algebras.push_back(std::move(aj));
        }
    }
    j["algebras"] = std::move(algebras);
    Json contexts = Json::array();
    for (const NamedContext* nc : select_contexts(ws, context)) {
        GMAlgebra g(nc->context);
        GmaOracle o(g);
        Json cj;
        cj["name"] = nc->name;
        cj["dims"] = dims_json(g);
        cj["trivial"] = is_trivial(g.context());
        cj["direct_sum"] = g.is_direct_sum();
        cj["faithfulness"] = to_json(faithfulness(g.context(), budget));
        cj["A"] = to_json(analyze_structure(g.A(), budget));
        cj["B"] = to_json(analyze_structure(g.B(), budget));
        cj["center"] = to_json(o.centers());
        cj["spaces"] = space_dims(o.oracle());
        contexts.push_back(std::move(cj));
    }
    j["contexts"] = std::move(contexts);
    return j;
}

Json proper_report(const Workspace& ws, const std::string& context, const std::string& map,
                   std::uint64_t budget) {
    std::vector<const NamedMap*> maps;
    if (!map.empty()) {
        maps.push_back(&ws.map(map));
    } else {
        for (const auto& m : ws.maps)
            if (context.empty() || m.target == context)
                maps.push_back(&m);
    }
    if (maps.empty())
        throw InputError("no maps to test; pass --map or add maps to the input");

    Json out = Json::array();
    for (const NamedMap* nm : maps) {
        Json j;
        j["map"] = nm->name;
        j["target"] = nm->target;
        if (!ws.has_context(nm->target)) {
            LieOracle o(*ws.algebra(nm->target).algebra);
            ProperDecision d = o.is_proper(nm->map);
            j["lie_derivation"] = true;
            j["verdict"] = d.proper ? "Proper" : "NotProper";
            j["witness"] = witness_json(d);
            out.push_back(std::move(j));
            continue;
        }
        GMAlgebra g(ws.context(nm->target).context);
        GmaOracle o(g);
        ProperDecision d = o.oracle().is_proper(nm->map);
        LieComponents c = extract_lie_components(o, nm->map);
        CriteriaReport cr = properness_criteria(o, nm->map, c);
        j["lie_derivation"] = true;
        j["verdict"] = d.proper ? "Proper" : "NotProper";
        j["witness"] = witness_json(d);
        j["components"] = to_json(c);
        j["conditions"] = to_json(validate_conditions(o, c));
        j["criteria"] = to_json(cr);
        EllBuild ell = build_ell_maps(o, c);
        if (!ell.maps)
            j["ell_maps"] = {{"built", false}, {"failure", ell.failure}};
        else
            j["ell_maps"] = {{"built", true},
                             {"ell_A", to_json(ell.maps->ell_A)},
                             {"ell_B", to_json(ell.maps->ell_B)}};
        std::optional<Matrix> ell_a;
        if (ell.maps && is_derivation(g.A(), EndoMap{c.P - ell.maps->ell_A}))
            ell_a = ell.maps->ell_A;
        else
            ell_a = find_ell_a(g.A(), c.P);
        if (ell_a) {
            VSubalgebra v = v_subalgebra(o, *ell_a, c, budget);
            Json vj;
            vj["ell_A"] = to_json(*ell_a);
            vj["v"] = to_json(v.v);
            vj["contains_commutators"] = v.contains_commutators;
            vj["contains_idempotents"] = v.contains_idempotents;
            vj["within_preimage"] = v.within_preimage;
            vj["equals_preimage"] = v.equals_preimage ? Json(*v.equals_preimage) : Json(nullptr);
            j["v_subalgebra"] = std::move(vj);
        }
        out.push_back(std::move(j));
    }
    return {{"results", out}};
}

Json theorems_report(const Workspace& ws, const std::string& context, std::uint64_t budget,
                     bool& mismatch) {
    mismatch = false;
    TheoremOptions opts;
    opts.budget = budget;
    Json contexts = Json::array();
    for (const NamedContext* nc : select_contexts(ws, context)) {
        GMAlgebra g(nc->context);
        TheoremSuite suite(g, opts);
        Json cj;
        cj["name"] = nc->name;
        cj["lie_derivation_property"] = suite.lie_property();
        Json verdicts = Json::array();
        for (const auto& v : suite.all()) {
            if (v.oracle_agrees && !*v.oracle_agrees)
                mismatch = true;
            verdicts.push_back(to_json(v));
        }
        cj["theorems"] = std::move(verdicts);
        contexts.push_back(std::move(cj));
    }
    return {{"contexts", contexts}};
}

Json examples_report() {
    Json a = Json::array();
    for (const auto& n : example_names())
        a.push_back({{"name", n}, {"description", example_description(n)}});
    return {{"examples", a}};
}

namespace {

bool is_flat(const Json& j) {
    for (const auto& x : j)
        if (x.is_structured())
            return false;
    return true;
}

std::string scalar_text(const Json& j) {
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

// Arrays of arrays of scalars (matrices) print one row per line.
bool is_matrix(const Json& j) {
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& r : j)
        if (!r.is_array() || !is_flat(r))
            return false;
    return true;
}

std::string inline_array(const Json& j) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
}

void render(const Json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (!v.is_structured()) {
                os << pad << it.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && is_flat(v)) {
                os << pad << it.key() << ": " << inline_array(v) << "\n";
            } else if (is_matrix(v)) {
                os << pad << it.key() << ":\n";
                for (const auto& r : v)
                    os << pad << "  " << inline_array(r) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render(v, indent + 2, os);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render(v, indent + 2, os);
            } else if (v.is_array()) {
                os << pad << "- " << (is_flat(v) ? inline_array(v) : v.dump()) << "\n";
            } else {
                os << pad << "- " << scalar_text(v) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, 0, os);
    return os.str();
}

} // namespace liederiv
