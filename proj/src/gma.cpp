#include "liederiv/gma.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

Vec slice(const Vec& x, std::size_t begin, std::size_t len) {
    return Vec(x.begin() + static_cast<std::ptrdiff_t>(begin),
               x.begin() + static_cast<std::ptrdiff_t>(begin + len));
}

AlgebraPtr build_block_algebra(const MoritaContext& c, const BlockIndex& bi) {
    const Field& f = c.field();
    const std::size_t d = bi.total();
    const FDAlgebra& A = *c.A;
    const FDAlgebra& B = *c.B;

    auto split = [&](std::size_t idx) {
        Vec x = f.unit_vector(d, idx);
        return BlockElement{slice(x, bi.a_begin(), bi.dim_a), slice(x, bi.m_begin(), bi.dim_m),
                            slice(x, bi.n_begin(), bi.dim_n), slice(x, bi.b_begin(), bi.dim_b)};
    };
    std::vector<BlockElement> basis;
    for (std::size_t i = 0; i < d; ++i)
        basis.push_back(split(i));

    Vec structure(d * d * d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const BlockElement& x = basis[i];
            const BlockElement& y = basis[j];
            Vec a = f.reduce(add(A.multiply(x.a, y.a), c.pair_mn(x.m, y.n)));
            Vec m = f.reduce(add(c.M.act_left(x.a, y.m), c.M.act_right(x.m, y.b)));
            Vec n = f.reduce(add(c.N.act_right(x.n, y.a), c.N.act_left(x.b, y.n)));
            Vec b = f.reduce(add(c.pair_nm(x.n, y.m), B.multiply(x.b, y.b)));
            Scalar* out = &structure[(i * d + j) * d];
            for (std::size_t k = 0; k < bi.dim_a; ++k)
                out[bi.a_begin() + k] = a[k];
            for (std::size_t k = 0; k < bi.dim_m; ++k)
                out[bi.m_begin() + k] = m[k];
            for (std::size_t k = 0; k < bi.dim_n; ++k)
                out[bi.n_begin() + k] = n[k];
            for (std::size_t k = 0; k < bi.dim_b; ++k)
                out[bi.b_begin() + k] = b[k];
        }
    Vec unit = f.zeros(d);
    for (std::size_t k = 0; k < bi.dim_a; ++k)
        unit[bi.a_begin() + k] = A.unit()[k];
    for (std::size_t k = 0; k < bi.dim_b; ++k)
        unit[bi.b_begin() + k] = B.unit()[k];

    std::vector<std::string> names;
    for (const auto& s : A.basis_names())
        names.push_back("A:" + s);
    for (std::size_t k = 0; k < bi.dim_m; ++k)
        names.push_back("M:m" + std::to_string(k));
    for (std::size_t k = 0; k < bi.dim_n; ++k)
        names.push_back("N:n" + std::to_string(k));
    for (const auto& s : B.basis_names())
        names.push_back("B:" + s);
    return std::make_shared<const FDAlgebra>(f, d, structure, unit, std::move(names));
}

} // namespace

GMAlgebra::GMAlgebra(MoritaContext context) : context_(std::move(context)) {
    require_valid(context_);
    blocks_ = BlockIndex{context_.A->dim(), context_.M.dim(), context_.N.dim(), context_.B->dim()};
    algebra_ = build_block_algebra(context_, blocks_);
}

GMAlgebra assemble(MoritaContext context) { return GMAlgebra(std::move(context)); }

BlockElement GMAlgebra::project(const Vec& x) const {
    if (x.size() != dim())
        throw InputError("element has " + std::to_string(x.size()) + " coordinates, G has dim " +
                         std::to_string(dim()));
    return BlockElement{slice(x, blocks_.a_begin(), blocks_.dim_a),
                        slice(x, blocks_.m_begin(), blocks_.dim_m),
                        slice(x, blocks_.n_begin(), blocks_.dim_n),
                        slice(x, blocks_.b_begin(), blocks_.dim_b)};
}

Vec GMAlgebra::embed(const Vec& a, const Vec& m, const Vec& n, const Vec& b) const {
    if (a.size() != blocks_.dim_a || m.size() != blocks_.dim_m || n.size() != blocks_.dim_n ||
        b.size() != blocks_.dim_b)
        throw InputError("block lengths do not match (A, M, N, B) dimensions");
    Vec x;
    x.reserve(dim());
    x.insert(x.end(), a.begin(), a.end());
    x.insert(x.end(), m.begin(), m.end());
    x.insert(x.end(), n.begin(), n.end());
    x.insert(x.end(), b.begin(), b.end());
    return field().reduce(std::move(x));
}

Vec GMAlgebra::embed_a(const Vec& a) const {
    const Field& f = field();
    return embed(a, f.zeros(blocks_.dim_m), f.zeros(blocks_.dim_n), f.zeros(blocks_.dim_b));
}

Vec GMAlgebra::embed_m(const Vec& m) const {
    const Field& f = field();
    return embed(f.zeros(blocks_.dim_a), m, f.zeros(blocks_.dim_n), f.zeros(blocks_.dim_b));
}

Vec GMAlgebra::embed_n(const Vec& n) const {
    const Field& f = field();
    return embed(f.zeros(blocks_.dim_a), f.zeros(blocks_.dim_m), n, f.zeros(blocks_.dim_b));
}

Vec GMAlgebra::embed_b(const Vec& b) const {
    const Field& f = field();
    return embed(f.zeros(blocks_.dim_a), f.zeros(blocks_.dim_m), f.zeros(blocks_.dim_n), b);
}

Vec CenterAnalysis::phi(const Vec& a) const {
    if (!phi_iso)
        throw PreconditionError("phi is only defined when M is faithful");
    auto coords = pi_a_z.coordinates(a);
    if (!coords)
        throw PreconditionError("phi: element " + to_string(a) + " is not in pi_A(Z(G))");
    return pi_b_z.combine(phi_iso->apply(*coords));
}

Vec CenterAnalysis::phi_inverse(const Vec& b) const {
    if (!phi_iso)
        throw PreconditionError("phi is only defined when M is faithful");
    auto coords = pi_b_z.coordinates(b);
    if (!coords)
        throw PreconditionError("phi^-1: element " + to_string(b) + " is not in pi_B(Z(G))");
    auto pre = solve(*phi_iso, *coords);
    if (!pre)
        throw ConsistencyError("phi is not surjective onto pi_B(Z(G))");
    return pi_a_z.combine(*pre);
}

CenterAnalysis center_analysis(const GMAlgebra& g) {
    const Field& f = g.field();
    const BlockIndex& bi = g.blocks();
    Subspace z = center(g.algebra());
    std::vector<Vec> as, bs;
    for (const auto& v : z.basis_vectors()) {
        BlockElement e = g.project(v);
        if (!is_zero(e.m) || !is_zero(e.n))
            throw ConsistencyError("central element " + to_string(v) +
                                   " has a nonzero off-diagonal block");
        as.push_back(e.a);
        bs.push_back(e.b);
    }
    Subspace pa = Subspace::span(f, bi.dim_a, as);
    Subspace pb = Subspace::span(f, bi.dim_b, bs);
    CenterAnalysis out{z, pa, pb, pa == center(g.A()), pb == center(g.B()), std::nullopt};

    if (!(left_faithful(g.M()) && right_faithful(g.M())))
        return out;

    // Columns: A-blocks of the Z(G) basis.
    Matrix proj_a = Matrix::from_columns(f, bi.dim_a, as);
    Matrix phi(f, pb.dim(), pa.dim());
    if (pa.dim() != pb.dim())
        throw ConsistencyError("faithful M but dim pi_A(Z(G)) != dim pi_B(Z(G))");
    for (std::size_t k = 0; k < pa.dim(); ++k) {
        Vec u = pa.basis().row(k);
        auto coef = solve(proj_a, u);
        if (!coef)
            throw ConsistencyError("pi_A(Z(G)) basis vector has no central lift");
        Vec image = f.zeros(bi.dim_b);
        for (std::size_t i = 0; i < coef->size(); ++i)
            image = f.reduce(add(image, scale((*coef)[i], bs[i])));
        auto bc = pb.coordinates(image);
        if (!bc)
            throw ConsistencyError("phi image left pi_B(Z(G))");
        phi.set_column(k, *bc);
    }
    if (rank(phi) != pa.dim())
        throw ConsistencyError("phi is not bijective");
    out.phi_iso = phi;

    const FDAlgebra& A = g.A();
    const FDAlgebra& B = g.B();
    auto pa_basis = pa.basis_vectors();
    for (const auto& u : pa_basis) {
        Vec pu = out.phi(u);
        for (std::size_t j = 0; j < g.M().dim(); ++j) {
            Vec m = g.M().basis_vector(j);
            if (g.M().act_left(u, m) != g.M().act_right(m, pu))
                throw ConsistencyError("phi: a m != m phi(a)");
        }
        for (std::size_t j = 0; j < g.N().dim(); ++j) {
            Vec n = g.N().basis_vector(j);
            if (g.N().act_left(pu, n) != g.N().act_right(n, u))
                throw ConsistencyError("phi: phi(a) n != n a");
        }
        for (const auto& v : pa_basis)
            if (out.phi(A.multiply(u, v)) != B.multiply(pu, out.phi(v)))
                throw ConsistencyError("phi is not multiplicative");
    }
    return out;
}

namespace {

// Corner algebra on a subspace closed under multiplication, with the given
// unit, in the subspace's canonical basis.
AlgebraPtr corner_algebra(const FDAlgebra& a, const Subspace& s, const Vec& unit,
                          const std::string& label) {
    const Field& f = a.field();
    const std::size_t k = s.dim();
    auto basis = s.basis_vectors();
    Vec structure(k * k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto c = s.coordinates(a.multiply(basis[i], basis[j]));
            if (!c)
                throw ConsistencyError("corner " + label + " is not closed under multiplication");
            for (std::size_t l = 0; l < k; ++l)
                structure[(i * k + j) * k + l] = (*c)[l];
        }
    auto u = s.coordinates(unit);
    if (!u)
        throw ConsistencyError("corner " + label + " does not contain its unit");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        names.push_back(label + std::to_string(i));
    return std::make_shared<const FDAlgebra>(f, k, structure, *u, std::move(names));
}

// Action tensor t[i][j][l]: coords in `out` of op(left_basis[i], right_basis[j]).
template <class Op>
Tensor3 induced_tensor(const Field& f, const std::vector<Vec>& left, const std::vector<Vec>& right,
                       const Subspace& out, Op op) {
    Tensor3 t(f, left.size(), right.size(), out.dim());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            auto c = out.coordinates(op(left[i], right[j]));
            if (!c)
                throw ConsistencyError("Peirce product left its block");
            for (std::size_t l = 0; l < out.dim(); ++l)
                t.set(i, j, l, (*c)[l]);
        }
    return t;
}

} // namespace

PeirceDecomposition peirce_decomposition(const FDAlgebra& a, const Vec& p_in) {
    const Field& f = a.field();
    if (p_in.size() != a.dim())
        throw InputError("idempotent has wrong length");
    Vec p = f.reduce(p_in);
    if (a.multiply(p, p) != p)
        throw InputError("Peirce decomposition needs an idempotent; p^2 != p");
    if (is_zero(p) || p == a.unit())
        throw InputError("Peirce decomposition needs a nontrivial idempotent (p != 0, 1)");
    Vec q = f.reduce(sub(a.unit(), p));
    Matrix lp = a.left_mult(p), lq = a.left_mult(q), rp = a.right_mult(p), rq = a.right_mult(q);
    Subspace pap = column_space(lp * rp);
    Subspace paq = column_space(lp * rq);
    Subspace qap = column_space(lq * rp);
    Subspace qaq = column_space(lq * rq);

    AlgebraPtr A = corner_algebra(a, pap, p, "p");
    AlgebraPtr B = corner_algebra(a, qaq, q, "q");
    auto ba = pap.basis_vectors(), bm = paq.basis_vectors(), bn = qap.basis_vectors(),
         bb = qaq.basis_vectors();
    auto mul = [&](const Vec& x, const Vec& y) { return a.multiply(x, y); };

    Bimodule M(A, B, bm.size(), induced_tensor(f, ba, bm, paq, mul),
               induced_tensor(f, bm, bb, paq, mul));
    Bimodule N(B, A, bn.size(), induced_tensor(f, bb, bn, qap, mul),
               induced_tensor(f, bn, ba, qap, mul));
    Tensor3 phi = induced_tensor(f, bm, bn, pap, mul);
    Tensor3 psi = induced_tensor(f, bn, bm, qaq, mul);

    std::vector<Vec> cols;
    for (auto* group : {&ba, &bm, &bn, &bb})
        cols.insert(cols.end(), group->begin(), group->end());
    Matrix t = Matrix::from_columns(f, a.dim(), cols);
    return PeirceDecomposition{
        MoritaContext{A, B, std::move(M), std::move(N), std::move(phi), std::move(psi)}, t};
}

MoritaContext peirce(const FDAlgebra& a, const Vec& p) {
    return peirce_decomposition(a, p).context;
}

bool is_isomorphism(const FDAlgebra& source, const FDAlgebra& target, const Matrix& t) {
    if (t.rows() != target.dim() || t.cols() != source.dim() || source.dim() != target.dim())
        return false;
    if (rank(t) != source.dim())
        return false;
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vec lhs = t.apply(source.multiply(source.basis_vector(i), source.basis_vector(j)));
            Vec rhs = target.multiply(t.column(i), t.column(j));
            if (lhs != rhs)
                return false;
        }
    return t.apply(source.unit()) == target.unit();
}

bool is_trivial(const MoritaContext& c) { return c.phi.is_zero() && c.psi.is_zero(); }

} // namespace liederiv
