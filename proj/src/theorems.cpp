#include "liederiv/theorems.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/library.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace liederiv {

const char* to_string(TheoremId id) {
    switch (id) {
    case TheoremId::DuWang:
        return "DuWang";
    case TheoremId::Domain:
        return "Domain";
    case TheoremId::StrongFaithful:
        return "StrongFaithful";
    case TheoremId::Main:
        return "Main";
    default:
        return "TrivialCorollary";
    }
}

const Hypothesis* TheoremVerdict::find(const std::string& name) const {
    for (const auto& h : hypotheses)
        if (h.name == name)
            return &h;
    return nullptr;
}

namespace {

TriState all_of(const std::vector<Hypothesis>& hs) {
    TriState t = TriState::Holds;
    for (const auto& h : hs)
        t = tri_and(t, h.value);
    return t;
}

TriState lie_property_of(const FDAlgebra& a, std::size_t cap) {
    if (a.dim() > cap)
        return TriState::Unknown;
    return tri(has_lie_derivation_property(a));
}

} // namespace

TheoremSuite::TheoremSuite(const GMAlgebra& g, TheoremOptions options)
    : options_(options),
      oracle_(g),
      sa_(analyze_structure(g.A(), options.budget)),
      sb_(analyze_structure(g.B(), options.budget)),
      m_left_(left_faithful(g.M())),
      m_right_(right_faithful(g.M())),
      m_strong_(strongly_faithful(g.M(), options.budget)),
      n_strong_(strongly_faithful(g.N(), options.budget)),
      a_lie_property_(lie_property_of(g.A(), options.lie_property_dim_cap)),
      b_lie_property_(lie_property_of(g.B(), options.lie_property_dim_cap)) {}

TheoremVerdict TheoremSuite::finish(TheoremId id, std::vector<Hypothesis> hyps,
                                    TriState overall) const {
    TheoremVerdict v{id, std::move(hyps), overall, std::nullopt, {}};
    if (gma().is_direct_sum()) {
        v.overall = TriState::Unknown;
        v.notes.push_back("M = N = 0: G is a direct sum and outside the scope of the theorem");
    }
    for (const auto& h : v.hypotheses)
        if (h.value == TriState::Unknown)
            v.notes.push_back("hypothesis '" + h.name + "' is undecided");
    if (v.overall == TriState::Holds)
        v.oracle_agrees = lie_property();
    return v;
}

TheoremVerdict TheoremSuite::du_wang() const {
    const CenterAnalysis& ca = oracle_.centers();
    std::vector<Hypothesis> h{
        {"M faithful", tri(m_left_ && m_right_)},
        {"pi_A(Z(G)) = Z(A)", tri(ca.pi_a_eq_za)},
        {"pi_B(Z(G)) = Z(B)", tri(ca.pi_b_eq_zb)},
        {"A or B central-ideal free", tri(sa_.central_ideal_free || sb_.central_ideal_free)},
    };
    TriState overall = all_of(h);
    return finish(TheoremId::DuWang, std::move(h), overall);
}

TheoremVerdict TheoremSuite::domain() const {
    const CenterAnalysis& ca = oracle_.centers();
    std::vector<Hypothesis> h{
        {"M faithful", tri(m_left_ && m_right_)},
        {"pi_A(Z(G)) = Z(A)", tri(ca.pi_a_eq_za)},
        {"pi_B(Z(G)) = Z(B)", tri(ca.pi_b_eq_zb)},
        {"A is a domain", sa_.domain},
        {"B is a domain", sb_.domain},
    };
    TriState overall = all_of(h);
    return finish(TheoremId::Domain, std::move(h), overall);
}

TheoremVerdict TheoremSuite::strong_faithful() const {
    const CenterAnalysis& ca = oracle_.centers();
    std::vector<Hypothesis> h{
        {"pi_A(Z(G)) = Z(A)", tri(ca.pi_a_eq_za)},
        {"pi_B(Z(G)) = Z(B)", tri(ca.pi_b_eq_zb)},
        {"M strongly faithful", m_strong_},
    };
    TriState overall = all_of(h);
    return finish(TheoremId::StrongFaithful, std::move(h), overall);
}

std::vector<Hypothesis> TheoremSuite::clause_hypotheses() const {
    const CenterAnalysis& ca = oracle_.centers();
    return {
        {"(I) pi_B(Z(G)) = Z(B) and M faithful left A-module", tri(ca.pi_b_eq_zb && m_left_)},
        {"(I) W_A = A and M faithful left A-module", tri_and(sa_.w_is_whole, tri(m_left_))},
        {"(I) A has the Lie derivation property and W_A = A",
         tri_and(a_lie_property_, sa_.w_is_whole)},
        {"(II) pi_A(Z(G)) = Z(A) and M faithful right B-module", tri(ca.pi_a_eq_za && m_right_)},
        {"(II) W_B = B and M faithful right B-module", tri_and(sb_.w_is_whole, tri(m_right_))},
        {"(II) B has the Lie derivation property and W_B = B",
         tri_and(b_lie_property_, sb_.w_is_whole)},
    };
}

TriState TheoremSuite::clause_one() const {
    auto h = clause_hypotheses();
    return tri_or(tri_or(h[0].value, h[1].value), h[2].value);
}

TriState TheoremSuite::clause_two() const {
    auto h = clause_hypotheses();
    return tri_or(tri_or(h[3].value, h[4].value), h[5].value);
}

TheoremVerdict TheoremSuite::main() const {
    std::vector<Hypothesis> h = clause_hypotheses();
    h.push_back({"(III)(i) A or B central-ideal free",
                 tri(sa_.central_ideal_free || sb_.central_ideal_free)});
    h.push_back({"(III)(ii) A and B are domains", tri_and(sa_.domain, sb_.domain)});
    h.push_back({"(III)(iii) M or N strongly faithful", tri_or(m_strong_, n_strong_)});
    TriState one = clause_one(), two = clause_two();
    TriState three = tri_or(tri_or(h[6].value, h[7].value), h[8].value);
    h.push_back({"(I)", one});
    h.push_back({"(II)", two});
    h.push_back({"(III)", three});
    return finish(TheoremId::Main, std::move(h), tri_and(tri_and(one, two), three));
}

TheoremVerdict TheoremSuite::trivial_corollary() const {
    const GMAlgebra& g = gma();
    if (!is_trivial(g.context()))
        throw PreconditionError("the trivial-GMA corollary needs MN = 0 and NM = 0");
    std::vector<Hypothesis> h = clause_hypotheses();
    TriState one = clause_one(), two = clause_two();
    h.push_back({"(I)", one});
    h.push_back({"(II)", two});
    TheoremVerdict v = finish(TheoremId::TrivialCorollary, std::move(h), tri_and(one, two));

    // Necessary direction: a proper Lie derivation has h_A(A) in pi_B(Z(G))
    // and h_B(B) in pi_A(Z(G)).
    const CenterAnalysis& ca = oracle_.centers();
    std::size_t examined = 0, proper = 0;
    for (const auto& l : oracle_.oracle().lie_derivations().basis_maps()) {
        ++examined;
        if (!oracle_.oracle().is_proper(l).proper)
            continue;
        ++proper;
        LieComponents c = read_lie_components(g, l);
        bool ok = true;
        for (std::size_t i = 0; i < g.A().dim(); ++i)
            ok = ok && ca.pi_b_z.contains(c.h_A.apply(g.A().basis_vector(i)));
        for (std::size_t i = 0; i < g.B().dim(); ++i)
            ok = ok && ca.pi_a_z.contains(c.h_B.apply(g.B().basis_vector(i)));
        if (!ok)
            throw ConsistencyError("proper basis Lie derivation " + std::to_string(examined - 1) +
                                   " has h_A(A) or h_B(B) outside the projected center");
    }
    v.notes.push_back("range condition holds on all " + std::to_string(proper) +
                      " proper basis Lie derivations (of " + std::to_string(examined) + ")");
    return v;
}

std::vector<TheoremVerdict> TheoremSuite::all() const {
    std::vector<TheoremVerdict> out{du_wang(), domain(), strong_faithful(), main()};
    if (is_trivial(gma().context()))
        out.push_back(trivial_corollary());
    return out;
}

TheoremVerdict check_du_wang(const GMAlgebra& g, TheoremOptions o) {
    return TheoremSuite(g, o).du_wang();
}
TheoremVerdict check_domain_theorem(const GMAlgebra& g, TheoremOptions o) {
    return TheoremSuite(g, o).domain();
}
TheoremVerdict check_strong_faithful_theorem(const GMAlgebra& g, TheoremOptions o) {
    return TheoremSuite(g, o).strong_faithful();
}
TheoremVerdict check_main(const GMAlgebra& g, TheoremOptions o) {
    return TheoremSuite(g, o).main();
}
TheoremVerdict check_trivial_corollary(const GMAlgebra& g, TheoremOptions o) {
    if (!is_trivial(g.context()))
        throw PreconditionError("the trivial-GMA corollary needs MN = 0 and NM = 0");
    return TheoremSuite(g, o).trivial_corollary();
}

PropertyTally check_properties(const GmaOracle& o) {
    const GMAlgebra& g = o.gma();
    const MoritaContext& ctx = g.context();
    PropertyTally t;
    auto fail = [&](std::size_t& counter, const std::string& msg) {
        ++counter;
        if (t.messages.size() < 20)
            t.messages.push_back(msg);
    };

    auto lie_basis = o.oracle().lie_derivations().basis_maps();
    for (std::size_t idx = 0; idx < lie_basis.size(); ++idx) {
        const EndoMap& l = lie_basis[idx];
        const std::string tag = "Lie basis " + std::to_string(idx) + ": ";
        ++t.lie_basis;
        LieComponents c = read_lie_components(g, l);
        if (reconstruct_lie(g, c) != l)
            fail(t.roundtrip_failures, tag + "reconstruction differs from L");
        ConditionReport rep = validate_conditions(o, c);
        for (const auto& name : rep.failed_names())
            fail(t.roundtrip_failures, tag + "condition " + name + " fails");

        if (o.m_faithful()) {
            for (const auto& x : o.commutators_a().basis_vectors())
                if (!is_zero(c.h_A.apply(x)))
                    fail(t.commutator_failures, tag + "h_A nonzero on a commutator");
            for (const auto& y : o.commutators_b().basis_vectors())
                if (!is_zero(c.h_B.apply(y)))
                    fail(t.commutator_failures, tag + "h_B nonzero on a commutator");
        }

        for (std::size_t j = 0; j < g.M().dim(); ++j)
            for (std::size_t k = 0; k < g.N().dim(); ++k) {
                Vec m = g.M().basis_vector(j), n = g.N().basis_vector(k);
                Vec lhs = g.M().act_left(c.h_B.apply(ctx.pair_nm(n, m)), m);
                Vec rhs = g.M().act_right(m, c.h_A.apply(ctx.pair_mn(m, n)));
                if (lhs != rhs)
                    fail(t.torsion_failures, tag + "h_B(nm) m != m h_A(mn) at (m" +
                                                 std::to_string(j) + ",n" + std::to_string(k) + ")");
            }

        try {
            CriteriaReport cr = properness_criteria(o, l, c);
            if (cr.verdict != Verdict::Inconclusive &&
                (cr.verdict == Verdict::Proper) != cr.oracle_proper)
                fail(t.criteria_mismatches, tag + "criteria verdict differs from the oracle");
            if (o.m_faithful() && cr.verdict == Verdict::Inconclusive)
                fail(t.criteria_mismatches, tag + "faithful M but no verdict");
        } catch (const ConsistencyError& e) {
            fail(t.criteria_mismatches, tag + e.what());
        }
    }

    auto der_basis = o.oracle().derivations().basis_maps();
    for (std::size_t idx = 0; idx < der_basis.size(); ++idx) {
        const EndoMap& d = der_basis[idx];
        const std::string tag = "derivation basis " + std::to_string(idx) + ": ";
        ++t.der_basis;
        LieComponents c = read_lie_components(g, d);
        if (!c.h_A.is_zero() || !c.h_B.is_zero()) {
            fail(t.der_failures, tag + "nonzero h-components");
            continue;
        }
        DerComponents dc{c.P, c.Q, c.f, c.g, c.m0, c.n0};
        if (reconstruct_der(g, dc) != d)
            fail(t.der_failures, tag + "reconstruction differs from D");
        for (const auto& name : validate_conditions(o, dc).failed_names())
            fail(t.der_failures, tag + "condition " + name + " fails");
    }
    return t;
}

// ---- fuzzing ----------------------------------------------------------------

namespace {

struct CatalogEntry {
    std::string name;
    AlgebraPtr algebra;
    std::vector<Matrix> automorphisms;
    std::vector<Vec> characters; // algebra maps to F, as values on the basis
};

Scalar non_square(const Field& f) {
    const std::uint64_t p = f.characteristic();
    for (std::uint64_t c = 2; c < p; ++c) {
        bool square = false;
        for (std::uint64_t x = 1; x < p && !square; ++x)
            square = (x * x) % p == c;
        if (!square)
            return Scalar(static_cast<unsigned long>(c));
    }
    throw InputError("no non-square in " + f.name());
}

std::vector<CatalogEntry> catalog(const Field& f, std::size_t max_dim) {
    std::vector<CatalogEntry> out;
    out.push_back({"F", scalar_algebra(f), {Matrix::identity(f, 1)}, {Vec{Scalar(1)}}});
    if (max_dim < 2)
        return out;
    auto diag = [&](int a, int b) {
        Matrix m(f, 2, 2);
        m.set(0, 0, a);
        m.set(1, 1, b);
        return m;
    };
    Matrix swap(f, 2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    std::vector<Matrix> dual_autos;
    for (std::uint64_t t = 1; t < f.characteristic(); ++t)
        dual_autos.push_back(diag(1, static_cast<int>(t)));
    out.push_back({"F[x]/(x^2)", dual_numbers(f), dual_autos, {Vec{Scalar(1), Scalar(0)}}});
    out.push_back({"FxF", split_pair(f), {Matrix::identity(f, 2), swap},
                   {Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}}});
    Scalar c = non_square(f);
    out.push_back({"F[x]/(x^2-" + to_string(c) + ")", quadratic_algebra(f, c),
                   {Matrix::identity(f, 2), diag(1, -1)}, {}});
    return out;
}

class Rng {
public:
    Rng(std::uint64_t seed, std::size_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
        gen_.seed(seq);
    }
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_));
    }
    bool coin() { return below(2) == 1; }
    Scalar scalar(const Field& f) {
        return Scalar(static_cast<unsigned long>(below(f.characteristic())));
    }

private:
    std::mt19937_64 gen_;
};

Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
    while (true) {
        Matrix s(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                s.set(r, c, rng.scalar(f));
        if (rank(s) == n)
            return s;
    }
}

Matrix inverse(const Matrix& s) {
    const Field& f = s.field();
    const std::size_t n = s.rows();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) {
        auto x = solve(s, f.unit_vector(n, i));
        if (!x)
            throw ConsistencyError("basis change matrix is singular");
        cols.push_back(*x);
    }
    return Matrix::from_columns(f, n, cols);
}

// Re-expresses a bimodule in the basis given by the columns of s.
Bimodule change_basis(const Bimodule& m, const Matrix& s, const Matrix& s_inv) {
    const Field& f = m.field();
    const std::size_t d = m.dim(), da = m.left_algebra().dim(), db = m.right_algebra().dim();
    Tensor3 left(f, da, d, d), right(f, d, db, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vec mj = s.column(j);
        for (std::size_t i = 0; i < da; ++i) {
            Vec img = s_inv.apply(m.act_left(m.left_algebra().basis_vector(i), mj));
            for (std::size_t k = 0; k < d; ++k)
                left.set(i, j, k, img[k]);
        }
        for (std::size_t i = 0; i < db; ++i) {
            Vec img = s_inv.apply(m.act_right(mj, m.right_algebra().basis_vector(i)));
            for (std::size_t k = 0; k < d; ++k)
                right.set(j, i, k, img[k]);
        }
    }
    return Bimodule(m.left_ptr(), m.right_ptr(), d, std::move(left), std::move(right));
}

MoritaContext rebase(const MoritaContext& c, Rng& rng) {
    const Field& f = c.field();
    const std::size_t dm = c.M.dim(), dn = c.N.dim();
    Matrix s = random_invertible(rng, f, dm), t = random_invertible(rng, f, dn);
    Matrix si = inverse(s), ti = inverse(t);
    Tensor3 phi(f, dm, dn, c.A->dim()), psi(f, dn, dm, c.B->dim());
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t k = 0; k < dn; ++k) {
            Vec a = c.pair_mn(s.column(j), t.column(k));
            Vec b = c.pair_nm(t.column(k), s.column(j));
            for (std::size_t x = 0; x < a.size(); ++x)
                phi.set(j, k, x, a[x]);
            for (std::size_t x = 0; x < b.size(); ++x)
                psi.set(k, j, x, b[x]);
        }
    return MoritaContext{c.A, c.B, change_basis(c.M, s, si), change_basis(c.N, t, ti), phi, psi};
}

MoritaContext twist(const MoritaContext& c, const Scalar& lambda) {
    return MoritaContext{c.A, c.B, c.M, c.N, c.phi.scaled(lambda), c.psi.scaled(lambda)};
}

// A acting on itself, the right action twisted by an automorphism sigma;
// pairings lambda*mn and lambda*sigma^{-1}(nm).
GeneratedContext regular_context(Rng& rng, const Field& f, const CatalogEntry& e, bool with_n,
                                 const Scalar& lambda) {
    const Matrix& sigma = e.automorphisms[rng.below(e.automorphisms.size())];
    AlgebraPtr A = e.algebra;
    Bimodule M = twisted_module_ab(A, A, sigma);
    Bimodule N = with_n ? twisted_module_ba(A, A, sigma) : Bimodule::zero(A, A);
    const std::size_t d = A->dim();
    Tensor3 phi(f, d, N.dim(), d), psi(f, N.dim(), d, d);
    if (with_n && !is_zero(lambda)) {
        Matrix sigma_inv = inverse(sigma);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec mn = A->multiply(A->basis_vector(j), A->basis_vector(k));
                Vec nm = sigma_inv.apply(A->multiply(A->basis_vector(k), A->basis_vector(j)));
                for (std::size_t x = 0; x < d; ++x) {
                    phi.set(j, k, x, lambda * mn[x]);
                    psi.set(k, j, x, lambda * nm[x]);
                }
            }
    }
    std::string desc = "regular " + e.name + (with_n ? ", N = A" : ", N = 0") +
                       ", twist " + to_string(sigma.flatten()) + ", lambda " + to_string(lambda);
    return {desc, MoritaContext{A, A, std::move(M), std::move(N), phi, psi}};
}

// One side is the scalar field acting through the unit map.
GeneratedContext scalar_side_context(Rng& rng, const Field& f, const CatalogEntry& e,
                                     bool with_n) {
    AlgebraPtr F = scalar_algebra(f);
    AlgebraPtr R = e.algebra;
    Matrix unit = Matrix::from_columns(f, R->dim(), {R->unit()});
    if (rng.coin()) {
        Bimodule M = twisted_module_ab(R, F, unit);
        Bimodule N = with_n ? twisted_module_ba(R, F, unit) : Bimodule::zero(F, R);
        return {"A = " + e.name + ", B = F" + (with_n ? ", N = A" : ", N = 0"),
                make_trivial_context(R, F, std::move(M), std::move(N))};
    }
    Bimodule M = twisted_module_ba(R, F, unit);
    Bimodule N = with_n ? twisted_module_ab(R, F, unit) : Bimodule::zero(R, F);
    return {"A = F, B = " + e.name + (with_n ? ", N = B" : ", N = 0"),
            make_trivial_context(F, R, std::move(M), std::move(N))};
}

GeneratedContext peirce_context(Rng& rng, const Field& f, const std::vector<CatalogEntry>& cat,
                                const Scalar& lambda) {
    const CatalogEntry& e = cat[rng.below(cat.size())];
    bool full = rng.coin();
    AlgebraPtr outer = full ? matrix_algebra(f, 2) : upper_triangular(f, 2);
    AlgebraPtr whole = tensor_product(*outer, *e.algebra);
    Vec p = whole->zero();
    // e11 (x) 1: e11 is basis vector 0 in both matrix bases.
    for (std::size_t j = 0; j < e.algebra->dim(); ++j)
        p[j] = e.algebra->unit()[j];
    MoritaContext c = twist(peirce(*whole, p), lambda);
    return {std::string("Peirce of ") + (full ? "M_2(" : "T_2(") + e.name + ") at e11, lambda " +
                to_string(lambda),
            std::move(c)};
}

// Direct sum of one-dimensional modules on which A and B act through
// characters; pairings are zero. M is rarely faithful here.
Bimodule character_module(const Field& f, const AlgebraPtr& left, const AlgebraPtr& right,
                          const std::vector<std::pair<Vec, Vec>>& chars) {
    const std::size_t d = chars.size();
    Tensor3 l(f, left->dim(), d, d), r(f, d, right->dim(), d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < left->dim(); ++i)
            l.set(i, k, k, chars[k].first[i]);
        for (std::size_t j = 0; j < right->dim(); ++j)
            r.set(k, j, k, chars[k].second[j]);
    }
    return Bimodule(left, right, d, std::move(l), std::move(r));
}

GeneratedContext character_context(Rng& rng, const Field& f,
                                   const std::vector<CatalogEntry>& cat) {
    std::vector<const CatalogEntry*> usable;
    for (const auto& e : cat)
        if (!e.characters.empty())
            usable.push_back(&e);
    const CatalogEntry& ea = *usable[rng.below(usable.size())];
    const CatalogEntry& eb = *usable[rng.below(usable.size())];
    std::string desc = "characters, A = " + ea.name + ", B = " + eb.name;
    auto draw = [&](const CatalogEntry& x) { return x.characters[rng.below(x.characters.size())]; };
    const std::size_t dm = 1 + rng.below(2);
    std::vector<std::pair<Vec, Vec>> mc, nc;
    for (std::size_t k = 0; k < dm; ++k) {
        Vec ca = draw(ea);
        Vec cb = draw(eb);
        mc.emplace_back(std::move(ca), std::move(cb));
    }
    const std::size_t dn = rng.below(3);
    for (std::size_t k = 0; k < dn; ++k) {
        Vec cb = draw(eb);
        Vec ca = draw(ea);
        nc.emplace_back(std::move(cb), std::move(ca));
    }
    desc += ", dim M " + std::to_string(dm) + ", dim N " + std::to_string(dn);
    Bimodule M = character_module(f, ea.algebra, eb.algebra, mc);
    Bimodule N = dn ? character_module(f, eb.algebra, ea.algebra, nc)
                    : Bimodule::zero(eb.algebra, ea.algebra);
    return {desc, make_trivial_context(ea.algebra, eb.algebra, std::move(M), std::move(N))};
}

// L (x) R with l.(x (x) y).r = lx (x) yr, optionally modulo the sub-bimodule
// generated by a basis tensor. Quotient coordinates are the non-pivot ones.
Bimodule tensor_quotient(const Field& f, const AlgebraPtr& L, const AlgebraPtr& R,
                         std::optional<std::pair<std::size_t, std::size_t>> gen) {
    const std::size_t dl = L->dim(), dr = R->dim(), d = dl * dr;
    auto tensor = [&](const Vec& x, const Vec& y) {
        Vec v = f.zeros(d);
        for (std::size_t i = 0; i < dl; ++i)
            for (std::size_t j = 0; j < dr; ++j)
                v[i * dr + j] = f.reduce(x[i] * y[j]);
        return v;
    };
    Subspace k = Subspace::zero(f, d);
    if (gen) {
        std::vector<Vec> span;
        for (std::size_t a = 0; a < dl; ++a)
            for (std::size_t b = 0; b < dr; ++b)
                span.push_back(tensor(L->multiply(L->basis_vector(a), L->basis_vector(gen->first)),
                                      R->multiply(R->basis_vector(gen->second), R->basis_vector(b))));
        k = Subspace::span(f, d, span);
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < d; ++c)
        if (std::find(k.pivots().begin(), k.pivots().end(), c) == k.pivots().end())
            keep.push_back(c);
    const std::size_t q = keep.size();
    Tensor3 left(f, dl, q, q), right(f, q, dr, q);
    for (std::size_t t = 0; t < q; ++t) {
        const std::size_t x = keep[t] / dr, y = keep[t] % dr;
        for (std::size_t i = 0; i < dl; ++i) {
            Vec img = k.residual(tensor(L->multiply(L->basis_vector(i), L->basis_vector(x)),
                                        R->basis_vector(y)));
            for (std::size_t u = 0; u < q; ++u)
                left.set(i, t, u, img[keep[u]]);
        }
        for (std::size_t j = 0; j < dr; ++j) {
            Vec img = k.residual(tensor(L->basis_vector(x),
                                        R->multiply(R->basis_vector(y), R->basis_vector(j))));
            for (std::size_t u = 0; u < q; ++u)
                right.set(t, j, u, img[keep[u]]);
        }
    }
    return Bimodule(L, R, q, std::move(left), std::move(right));
}

// Trivial contexts in the shape of the non-proper example: M = A (x) B and
// N = B (x) A, each possibly cut down by a quotient.
GeneratedContext tensor_context(Rng& rng, const Field& f, const std::vector<CatalogEntry>& cat) {
    // Prefer blocks of dimension two; scalar blocks give little here.
    const std::size_t first = cat.size() > 1 ? 1 : 0;
    const CatalogEntry& ea = cat[first + rng.below(cat.size() - first)];
    const CatalogEntry& eb = cat[first + rng.below(cat.size() - first)];
    const AlgebraPtr &A = ea.algebra, &B = eb.algebra;
    std::optional<std::pair<std::size_t, std::size_t>> gen;
    if (rng.below(3) != 0) {
        // Basis element 0 is the unit or an idempotent; skip it.
        const std::size_t i = A->dim() - 1 - rng.below(std::max<std::size_t>(A->dim() - 1, 1));
        const std::size_t j = B->dim() - 1 - rng.below(std::max<std::size_t>(B->dim() - 1, 1));
        gen = std::make_pair(i, j);
    }
    const bool with_n = rng.coin();
    std::string desc = "tensor, A = " + ea.name + ", B = " + eb.name;
    if (gen)
        desc += ", modulo " + A->basis_names()[gen->first] + "*" + B->basis_names()[gen->second];
    desc += with_n ? ", N mirrored" : ", N = 0";
    Bimodule M = tensor_quotient(f, A, B, gen);
    std::optional<std::pair<std::size_t, std::size_t>> mirror;
    if (gen)
        mirror = std::make_pair(gen->second, gen->first);
    Bimodule N = with_n ? tensor_quotient(f, B, A, mirror) : Bimodule::zero(B, A);
    return {desc, make_trivial_context(A, B, std::move(M), std::move(N))};
}

} // namespace

GeneratedContext generate_context(const FuzzConfig& config, std::size_t index) {
    if (config.fields.empty())
        throw InputError("fuzz config lists no fields");
    const Field& f = config.fields[index % config.fields.size()];
    require_two_torsion_free(f);
    if (!f.is_prime())
        throw InputError("fuzzing needs prime fields");
    Rng rng(config.seed, index);
    auto cat = catalog(f, config.max_block_dim);
    auto pick_lambda = [&]() {
        return config.zero_pairings_only ? Scalar(0) : rng.scalar(f);
    };

    auto build = [&]() -> GeneratedContext {
        // Draws are sequenced explicitly; argument evaluation order is unspecified.
        const std::size_t kind = rng.below(5);
        if (kind == 4)
            return tensor_context(rng, f, cat);
        if (kind == 3)
            return character_context(rng, f, cat);
        if (kind == 2) {
            Scalar lambda = pick_lambda();
            return peirce_context(rng, f, cat, lambda);
        }
        const CatalogEntry& e = cat[rng.below(cat.size())];
        const bool with_n = rng.coin();
        if (kind == 1)
            return scalar_side_context(rng, f, e, with_n);
        Scalar lambda = pick_lambda();
        return regular_context(rng, f, e, with_n, lambda);
    };
    GeneratedContext out = build();
    if (out.context.M.dim() > 0 && rng.coin()) {
        out.context = rebase(out.context, rng);
        out.description += ", module bases changed";
    }
    out.description = f.name() + ": " + out.description;
    return out;
}

FuzzReport fuzz(const FuzzConfig& config) {
    for (const auto& f : config.fields)
        require_two_torsion_free(f);
    FuzzReport report{config, {}, {}, {}, 0};
    TheoremOptions opts;
    opts.budget = config.budget;
    for (std::size_t i = 0; i < config.count; ++i) {
        GeneratedContext gc = generate_context(config, i);
        GMAlgebra g(gc.context);
        TheoremSuite suite(g, opts);
        const GmaOracle& o = suite.oracle();
        FuzzCase fc{i,
                    gc.description,
                    g.field().name(),
                    g.blocks(),
                    is_trivial(g.context()),
                    o.m_faithful(),
                    suite.lie_property(),
                    o.oracle().lie_derivations().dim(),
                    o.oracle().proper_maps().dim(),
                    {},
                    std::nullopt};
        bool any_holds = false;
        for (const auto& v : suite.all()) {
            fc.verdicts.emplace_back(v.id, v.overall);
            if (v.overall != TriState::Holds)
                continue;
            any_holds = true;
            if (!fc.lie_property) {
                for (const auto& l : o.oracle().lie_derivations().basis_maps())
                    if (!o.oracle().is_proper(l).proper) {
                        report.violations.push_back({i, v.id, gc.description, l});
                        break;
                    }
            }
        }
        if (fc.lie_property && !any_holds)
            report.completeness_gaps.push_back(i);
        if (config.properties) {
            fc.properties = check_properties(o);
            report.property_failures += fc.properties->total_failures();
        }
        report.cases.push_back(std::move(fc));
    }
    return report;
}

} // namespace liederiv
