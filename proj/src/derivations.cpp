#include "liederiv/derivations.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

void require_two_torsion_free(const Field& f) {
    if (!f.two_torsion_free())
        throw TorsionError("Lie derivation analysis requires 2-torsion free modules; " + f.name() +
                           " has characteristic 2");
}

MapSpace::MapSpace(std::size_t algebra_dim, Subspace space)
    : dim_(algebra_dim), space_(std::move(space)) {
    if (space_.ambient_dim() != dim_ * dim_)
        throw InputError("map space ambient dimension must be d^2");
}

std::vector<EndoMap> MapSpace::basis_maps() const {
    std::vector<EndoMap> out;
    for (const auto& v : space_.basis_vectors())
        out.push_back(EndoMap{Matrix::unflatten(space_.field(), dim_, dim_, v)});
    return out;
}

namespace {

// One block of d equations per basis pair (i, j) of
//   X(e_i * e_j) - X(e_i) * e_j - e_i * X(e_j) = 0
// where * has structure constants `prod(i, j, k)`. Unknown X[r][c] sits at
// column r*d + c.
template <class Prod>
Subspace leibniz_kernel(const FDAlgebra& a, Prod prod, bool antisymmetric) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    std::vector<Vec> rows;
    Vec row(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = antisymmetric ? i + 1 : 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::fill(row.begin(), row.end(), Scalar(0));
                for (std::size_t c = 0; c < d; ++c)
                    row[k * d + c] += prod(i, j, c);
                for (std::size_t r = 0; r < d; ++r) {
                    row[r * d + i] -= prod(r, j, k);
                    row[r * d + j] -= prod(i, r, k);
                }
                Vec reduced = f.reduce(row);
                if (!is_zero(reduced))
                    rows.push_back(std::move(reduced));
            }
    return kernel(Matrix::from_rows(f, d * d, rows));
}

} // namespace

MapSpace derivation_space(const FDAlgebra& a) {
    require_two_torsion_free(a.field());
    auto prod = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar {
        return a.constant(i, j, k);
    };
    return MapSpace(a.dim(), leibniz_kernel(a, prod, false));
}

MapSpace lie_derivation_space(const FDAlgebra& a) {
    require_two_torsion_free(a.field());
    auto prod = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar {
        return a.constant(i, j, k) - a.constant(j, i, k);
    };
    return MapSpace(a.dim(), leibniz_kernel(a, prod, true));
}

MapSpace tau_space(const FDAlgebra& a) {
    require_two_torsion_free(a.field());
    const std::size_t d = a.dim();
    const Field& f = a.field();
    Matrix rz = center(a).residual_matrix();
    std::vector<Vec> rows;
    // tau(e_i) in Z(A): rz * column_i = 0.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t s = 0; s < d; ++s) {
            Vec row = f.zeros(d * d);
            for (std::size_t r = 0; r < d; ++r)
                row[r * d + i] = rz(s, r);
            if (!is_zero(row))
                rows.push_back(std::move(row));
        }
    // tau(v) = 0 for v spanning [A, A].
    for (const auto& v : commutator_span(a).basis_vectors())
        for (std::size_t k = 0; k < d; ++k) {
            Vec row = f.zeros(d * d);
            for (std::size_t c = 0; c < d; ++c)
                row[k * d + c] = v[c];
            rows.push_back(std::move(row));
        }
    return MapSpace(d, kernel(Matrix::from_rows(f, d * d, rows)));
}

MapSpace proper_space(const FDAlgebra& a) {
    return MapSpace(a.dim(), sum(derivation_space(a).space(), tau_space(a).space()));
}

Violation derivation_violation(const FDAlgebra& a, const EndoMap& d) {
    if (d.dim() != a.dim() || d.matrix.cols() != a.dim())
        throw InputError("map shape does not match algebra dimension");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
            Vec lhs = d(a.multiply(ei, ej));
            Vec rhs = a.field().reduce(add(a.multiply(d(ei), ej), a.multiply(ei, d(ej))));
            if (lhs != rhs)
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

Violation lie_derivation_violation(const FDAlgebra& a, const EndoMap& l) {
    if (l.dim() != a.dim() || l.matrix.cols() != a.dim())
        throw InputError("map shape does not match algebra dimension");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
            Vec lhs = l(a.bracket(ei, ej));
            Vec rhs = a.field().reduce(add(a.bracket(l(ei), ej), a.bracket(ei, l(ej))));
            if (lhs != rhs)
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

bool is_derivation(const FDAlgebra& a, const EndoMap& d) { return !derivation_violation(a, d); }
bool is_lie_derivation(const FDAlgebra& a, const EndoMap& l) {
    return !lie_derivation_violation(a, l);
}

bool is_central_commutator_vanishing(const FDAlgebra& a, const EndoMap& tau) {
    Subspace z = center(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!z.contains(tau(a.basis_vector(i))))
            return false;
    for (const auto& v : commutator_span(a).basis_vectors())
        if (!is_zero(tau(v)))
            return false;
    return true;
}

EndoMap inner_derivation(const FDAlgebra& a, const Vec& c) {
    return EndoMap{a.left_mult(c) - a.right_mult(c)};
}

LieOracle::LieOracle(const FDAlgebra& a)
    : algebra_(&a), der_(derivation_space(a)), lie_(lie_derivation_space(a)), tau_(tau_space(a)),
      proper_(a.dim(), sum(der_.space(), tau_.space())) {}

ProperDecision LieOracle::is_proper(const EndoMap& l) const {
    const FDAlgebra& a = *algebra_;
    if (auto v = lie_derivation_violation(a, l))
        throw PreconditionError("map is not a Lie derivation: identity fails at bracket pair (" +
                                std::to_string(v->first) + "," + std::to_string(v->second) + ")");
    const Field& f = a.field();
    const std::size_t d = a.dim();
    std::vector<Vec> cols = der_.space().basis_vectors();
    const std::size_t nd = cols.size();
    for (const auto& t : tau_.space().basis_vectors())
        cols.push_back(t);
    Matrix sys = Matrix::from_columns(f, d * d, cols);
    auto x = solve(sys, l.matrix.flatten());
    if (!x)
        return ProperDecision{false, std::nullopt};
    Vec dflat = f.zeros(d * d), tflat = f.zeros(d * d);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        Vec& target = i < nd ? dflat : tflat;
        for (std::size_t r = 0; r < d * d; ++r)
            target[r] += (*x)[i] * cols[i][r];
    }
    EndoMap dmap{Matrix::unflatten(f, d, d, f.reduce(dflat))};
    EndoMap tmap{Matrix::unflatten(f, d, d, f.reduce(tflat))};
    if (dmap.matrix + tmap.matrix != l.matrix)
        throw ConsistencyError("proper witness does not sum to L");
    if (!is_derivation(a, dmap))
        throw ConsistencyError("proper witness: D fails the Leibniz identity");
    if (!is_central_commutator_vanishing(a, tmap))
        throw ConsistencyError("proper witness: tau is not central valued / commutator vanishing");
    return ProperDecision{true, ProperWitness{std::move(dmap), std::move(tmap)}};
}

ProperDecision is_proper(const FDAlgebra& a, const EndoMap& l) { return LieOracle(a).is_proper(l); }

bool has_lie_derivation_property(const FDAlgebra& a) {
    return LieOracle(a).has_lie_derivation_property();
}

} // namespace liederiv
