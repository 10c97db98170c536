#include "liederiv/morita.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

std::string idx(std::initializer_list<std::size_t> is) {
    std::string s = "(";
    bool first = true;
    for (auto i : is) {
        s += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return s + ")";
}

} // namespace

Tensor3::Tensor3(Field field, std::size_t n0, std::size_t n1, std::size_t n2)
    : field_(field), n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, Scalar(0)) {}

Tensor3::Tensor3(Field field, std::size_t n0, std::size_t n1, std::size_t n2, const Vec& flat)
    : field_(field), n0_(n0), n1_(n1), n2_(n2) {
    if (flat.size() != n0 * n1 * n2)
        throw InputError("tensor has " + std::to_string(flat.size()) + " entries, expected " +
                         std::to_string(n0 * n1 * n2));
    data_ = field.reduce(flat);
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    data_.at((i * n1_ + j) * n2_ + k) = field_.reduce(v);
}

Vec Tensor3::apply(const Vec& x, const Vec& y) const {
    if (x.size() != n0_ || y.size() != n1_)
        throw InputError("tensor evaluation shape mismatch");
    Vec r(n2_, Scalar(0));
    for (std::size_t i = 0; i < n0_; ++i) {
        if (liederiv::is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < n1_; ++j) {
            if (liederiv::is_zero(y[j]))
                continue;
            Scalar xy = x[i] * y[j];
            const Scalar* row = &data_[(i * n1_ + j) * n2_];
            for (std::size_t k = 0; k < n2_; ++k)
                if (!liederiv::is_zero(row[k]))
                    r[k] += xy * row[k];
        }
    }
    return field_.reduce(std::move(r));
}

Tensor3 Tensor3::scaled(const Scalar& s) const {
    Tensor3 t(field_, n0_, n1_, n2_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        t.data_[i] = field_.mul(s, data_[i]);
    return t;
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, Tensor3 left_action,
                   Tensor3 right_action)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)) {
    if (left_->field() != right_->field())
        throw InputError("bimodule algebras live over different fields");
    if (left_action_.extent(0) != left_->dim() || left_action_.extent(1) != dim_ ||
        left_action_.extent(2) != dim_)
        throw InputError("left action tensor must have shape [dimA][dimM][dimM]");
    if (right_action_.extent(0) != dim_ || right_action_.extent(1) != right_->dim() ||
        right_action_.extent(2) != dim_)
        throw InputError("right action tensor must have shape [dimM][dimB][dimM]");
}

Bimodule Bimodule::zero(AlgebraPtr left, AlgebraPtr right) {
    const Field f = left->field();
    const std::size_t da = left->dim(), db = right->dim();
    return Bimodule(std::move(left), std::move(right), 0, Tensor3(f, da, 0, 0),
                    Tensor3(f, 0, db, 0));
}

Matrix Bimodule::left_operator(const Vec& a) const {
    Matrix m(field(), dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        m.set_column(j, act_left(a, basis_vector(j)));
    return m;
}

Matrix Bimodule::right_operator(const Vec& b) const {
    Matrix m(field(), dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        m.set_column(j, act_right(basis_vector(j), b));
    return m;
}

ValidationReport validate_bimodule(const Bimodule& m) {
    ValidationReport rep;
    const FDAlgebra& A = m.left_algebra();
    const FDAlgebra& B = m.right_algebra();
    for (std::size_t j = 0; j < m.dim(); ++j) {
        Vec mj = m.basis_vector(j);
        if (m.act_left(A.unit(), mj) != mj)
            rep.failures.push_back("left unit: 1_A m != m at m" + idx({j}));
        if (m.act_right(mj, B.unit()) != mj)
            rep.failures.push_back("right unit: m 1_B != m at m" + idx({j}));
    }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k)
            for (std::size_t j = 0; j < m.dim(); ++j) {
                Vec ai = A.basis_vector(i), ak = A.basis_vector(k), mj = m.basis_vector(j);
                if (m.act_left(A.multiply(ai, ak), mj) != m.act_left(ai, m.act_left(ak, mj)))
                    rep.failures.push_back("left associativity (aa')m = a(a'm) at (a,a',m) = " +
                                           idx({i, k, j}));
            }
    for (std::size_t j = 0; j < m.dim(); ++j)
        for (std::size_t i = 0; i < B.dim(); ++i)
            for (std::size_t k = 0; k < B.dim(); ++k) {
                Vec mj = m.basis_vector(j), bi = B.basis_vector(i), bk = B.basis_vector(k);
                if (m.act_right(mj, B.multiply(bi, bk)) != m.act_right(m.act_right(mj, bi), bk))
                    rep.failures.push_back("right associativity m(bb') = (mb)b' at (m,b,b') = " +
                                           idx({j, i, k}));
            }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            for (std::size_t k = 0; k < B.dim(); ++k) {
                Vec ai = A.basis_vector(i), mj = m.basis_vector(j), bk = B.basis_vector(k);
                if (m.act_right(m.act_left(ai, mj), bk) != m.act_left(ai, m.act_right(mj, bk)))
                    rep.failures.push_back("bimodule compatibility (am)b = a(mb) at (a,m,b) = " +
                                           idx({i, j, k}));
            }
    return rep;
}

MoritaContext make_trivial_context(AlgebraPtr A, AlgebraPtr B, Bimodule M, Bimodule N) {
    const Field f = A->field();
    Tensor3 phi(f, M.dim(), N.dim(), A->dim());
    Tensor3 psi(f, N.dim(), M.dim(), B->dim());
    return MoritaContext{std::move(A), std::move(B), std::move(M), std::move(N), std::move(phi),
                         std::move(psi)};
}

ValidationReport validate_context(const MoritaContext& c) {
    ValidationReport rep;
    const FDAlgebra& A = *c.A;
    const FDAlgebra& B = *c.B;
    const Bimodule& M = c.M;
    const Bimodule& N = c.N;
    if (A.field() != B.field()) {
        rep.failures.push_back("A and B live over different fields");
        return rep;
    }
    if (&M.left_algebra() != &A || &M.right_algebra() != &B)
        rep.failures.push_back("M must be an (A,B)-bimodule of this context");
    if (&N.left_algebra() != &B || &N.right_algebra() != &A)
        rep.failures.push_back("N must be a (B,A)-bimodule of this context");
    if (c.phi.extent(0) != M.dim() || c.phi.extent(1) != N.dim() || c.phi.extent(2) != A.dim())
        rep.failures.push_back("phi must have shape [dimM][dimN][dimA]");
    if (c.psi.extent(0) != N.dim() || c.psi.extent(1) != M.dim() || c.psi.extent(2) != B.dim())
        rep.failures.push_back("psi must have shape [dimN][dimM][dimB]");
    if (!rep.ok())
        return rep;
    for (auto& f : validate_bimodule(M).failures)
        rep.failures.push_back("M: " + f);
    for (auto& f : validate_bimodule(N).failures)
        rep.failures.push_back("N: " + f);

    for (std::size_t mi = 0; mi < M.dim(); ++mi)
        for (std::size_t ni = 0; ni < N.dim(); ++ni) {
            Vec m = M.basis_vector(mi), n = N.basis_vector(ni);
            Vec mn = c.pair_mn(m, n);
            Vec nm = c.pair_nm(n, m);
            for (std::size_t ai = 0; ai < A.dim(); ++ai) {
                Vec a = A.basis_vector(ai);
                if (c.pair_mn(M.act_left(a, m), n) != A.multiply(a, mn))
                    rep.failures.push_back("phi(am,n) = a phi(m,n) fails at (a,m,n) = " +
                                           idx({ai, mi, ni}));
                if (c.pair_mn(m, N.act_right(n, a)) != A.multiply(mn, a))
                    rep.failures.push_back("phi(m,na) = phi(m,n) a fails at (m,n,a) = " +
                                           idx({mi, ni, ai}));
                if (c.pair_nm(N.act_right(n, a), m) != c.pair_nm(n, M.act_left(a, m)))
                    rep.failures.push_back("psi(na,m) = psi(n,am) fails at (n,a,m) = " +
                                           idx({ni, ai, mi}));
            }
            for (std::size_t bi = 0; bi < B.dim(); ++bi) {
                Vec b = B.basis_vector(bi);
                if (c.pair_nm(N.act_left(b, n), m) != B.multiply(b, nm))
                    rep.failures.push_back("psi(bn,m) = b psi(n,m) fails at (b,n,m) = " +
                                           idx({bi, ni, mi}));
                if (c.pair_nm(n, M.act_right(m, b)) != B.multiply(nm, b))
                    rep.failures.push_back("psi(n,mb) = psi(n,m) b fails at (n,m,b) = " +
                                           idx({ni, mi, bi}));
                if (c.pair_mn(M.act_right(m, b), n) != c.pair_mn(m, N.act_left(b, n)))
                    rep.failures.push_back("phi(mb,n) = phi(m,bn) fails at (m,b,n) = " +
                                           idx({mi, bi, ni}));
            }
            for (std::size_t m2 = 0; m2 < M.dim(); ++m2) {
                Vec mm = M.basis_vector(m2);
                if (M.act_left(mn, mm) != M.act_right(m, c.pair_nm(n, mm)))
                    rep.failures.push_back("diagram phi(m,n)m' = m psi(n,m') fails at (m,n,m') = " +
                                           idx({mi, ni, m2}));
            }
            for (std::size_t n2 = 0; n2 < N.dim(); ++n2) {
                Vec nn = N.basis_vector(n2);
                if (N.act_left(c.pair_nm(n, m), nn) != N.act_right(n, c.pair_mn(m, nn)))
                    rep.failures.push_back("diagram psi(n,m)n' = n phi(m,n') fails at (n,m,n') = " +
                                           idx({ni, mi, n2}));
            }
        }
    return rep;
}

void require_valid(const MoritaContext& c) {
    auto rep = validate_context(c);
    if (!rep.ok())
        throw ValidationError("invalid Morita context: " + rep.failures.front(), rep.failures);
}

bool left_faithful(const Bimodule& m) {
    // Kernel of a -> (matrix of m' -> a m'), flattened.
    const FDAlgebra& A = m.left_algebra();
    Matrix rep(m.field(), m.dim() * m.dim(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec col = m.left_operator(A.basis_vector(i)).flatten();
        rep.set_column(i, col);
    }
    return kernel(rep).is_zero();
}

bool right_faithful(const Bimodule& m) {
    const FDAlgebra& B = m.right_algebra();
    Matrix rep(m.field(), m.dim() * m.dim(), B.dim());
    for (std::size_t i = 0; i < B.dim(); ++i)
        rep.set_column(i, m.right_operator(B.basis_vector(i)).flatten());
    return kernel(rep).is_zero();
}

namespace {

bool projective_rep(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return x == 1;
    return false;
}

// Shared engine for "x * y = 0 implies x = 0 or y = 0" where x ranges over
// an algebra and y over the module. `op(x)` is the matrix of y -> x*y and
// `op_by_module(y)` the matrix of x -> x*y.
template <class OpX, class OpY>
TriState no_zero_action(const Field& f, std::size_t dx, std::size_t dy, OpX op, OpY op_y,
                        std::uint64_t budget) {
    if (dx == 0 || dy == 0)
        return TriState::Holds;
    if (dx == 1) // x = s * e0 with e0 acting bijectively or not
        return tri(rank(op(f.unit_vector(dx, 0))) == dy);
    if (dy == 1)
        return tri(rank(op_y(f.unit_vector(dy, 0))) == dx);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            if (is_zero(op(f.unit_vector(dx, i)).apply(f.unit_vector(dy, j))))
                return TriState::Fails;
    if (f.is_finite() && field_power(f, dx) <= budget) {
        bool bad = false;
        enumerate_vectors(f, dx, [&](const Vec& x) {
            if (!projective_rep(x))
                return true;
            if (rank(op(x)) < dy) {
                bad = true;
                return false;
            }
            return true;
        });
        return tri(!bad);
    }
    if (f.is_finite() && field_power(f, dy) <= budget) {
        bool bad = false;
        enumerate_vectors(f, dy, [&](const Vec& y) {
            if (!projective_rep(y))
                return true;
            if (rank(op_y(y)) < dx) {
                bad = true;
                return false;
            }
            return true;
        });
        return tri(!bad);
    }
    return TriState::Unknown;
}

} // namespace

TriState left_no_zero_action(const Bimodule& m, std::uint64_t budget) {
    const FDAlgebra& A = m.left_algebra();
    auto op = [&](const Vec& a) { return m.left_operator(a); };
    auto op_y = [&](const Vec& y) {
        Matrix r(m.field(), m.dim(), A.dim());
        for (std::size_t i = 0; i < A.dim(); ++i)
            r.set_column(i, m.act_left(A.basis_vector(i), y));
        return r;
    };
    return no_zero_action(m.field(), A.dim(), m.dim(), op, op_y, budget);
}

TriState right_no_zero_action(const Bimodule& m, std::uint64_t budget) {
    const FDAlgebra& B = m.right_algebra();
    auto op = [&](const Vec& b) { return m.right_operator(b); };
    auto op_y = [&](const Vec& y) {
        Matrix r(m.field(), m.dim(), B.dim());
        for (std::size_t i = 0; i < B.dim(); ++i)
            r.set_column(i, m.act_right(y, B.basis_vector(i)));
        return r;
    };
    return no_zero_action(m.field(), B.dim(), m.dim(), op, op_y, budget);
}

TriState strongly_faithful(const Bimodule& m, std::uint64_t budget) {
    TriState clause1 = tri_and(tri(right_faithful(m)), left_no_zero_action(m, budget));
    TriState clause2 = tri_and(tri(left_faithful(m)), right_no_zero_action(m, budget));
    return tri_or(clause1, clause2);
}

FaithfulnessReport faithfulness(const MoritaContext& c, std::uint64_t budget) {
    return FaithfulnessReport{left_faithful(c.M), right_faithful(c.M),
                              strongly_faithful(c.M, budget), two_torsion_free(c)};
}

bool two_torsion_free(const MoritaContext& c) { return c.field().two_torsion_free(); }

} // namespace liederiv
