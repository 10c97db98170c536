#include "liederiv/algebra.hpp"

#include "liederiv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liederiv {

TriState tri(bool b) { return b ? TriState::Holds : TriState::Fails; }

TriState tri_and(TriState a, TriState b) {
    if (a == TriState::Fails || b == TriState::Fails)
        return TriState::Fails;
    if (a == TriState::Unknown || b == TriState::Unknown)
        return TriState::Unknown;
    return TriState::Holds;
}

TriState tri_or(TriState a, TriState b) {
    if (a == TriState::Holds || b == TriState::Holds)
        return TriState::Holds;
    if (a == TriState::Unknown || b == TriState::Unknown)
        return TriState::Unknown;
    return TriState::Fails;
}

const char* to_string(TriState t) {
    switch (t) {
    case TriState::Holds:
        return "Holds";
    case TriState::Fails:
        return "Fails";
    default:
        return "Unknown";
    }
}

namespace {

// Product of basis vectors through a raw flattened tensor.
Vec basis_product(const Field& f, std::size_t d, const Vec& c, std::size_t i, std::size_t j) {
    Vec r(d);
    for (std::size_t k = 0; k < d; ++k)
        r[k] = c[(i * d + j) * d + k];
    return f.reduce(std::move(r));
}

Vec raw_multiply(const Field& f, std::size_t d, const Vec& c, const Vec& x, const Vec& y) {
    Vec r(d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (is_zero(y[j]))
                continue;
            Scalar xy = x[i] * y[j];
            const Scalar* row = &c[(i * d + j) * d];
            for (std::size_t k = 0; k < d; ++k)
                if (!is_zero(row[k]))
                    r[k] += xy * row[k];
        }
    }
    return f.reduce(std::move(r));
}

} // namespace

std::vector<std::string> FDAlgebra::axiom_failures(const Field& field, std::size_t dim,
                                                   const Vec& structure, const Vec& unit) {
    std::vector<std::string> out;
    if (dim == 0) {
        out.push_back("algebra dimension must be positive");
        return out;
    }
    if (structure.size() != dim * dim * dim) {
        out.push_back("structure tensor has " + std::to_string(structure.size()) +
                      " entries, expected " + std::to_string(dim * dim * dim));
        return out;
    }
    if (unit.size() != dim) {
        out.push_back("unit has length " + std::to_string(unit.size()) + ", expected " +
                      std::to_string(dim));
        return out;
    }
    Vec c = field.reduce(structure);
    Vec u = field.reduce(unit);
    std::vector<Vec> prod(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            prod[i * dim + j] = basis_product(field, dim, c, i, j);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Vec lhs = raw_multiply(field, dim, c, prod[i * dim + j], field.unit_vector(dim, k));
                Vec rhs = raw_multiply(field, dim, c, field.unit_vector(dim, i), prod[j * dim + k]);
                if (lhs != rhs)
                    out.push_back("associativity fails at (i,j,k) = (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
            }
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e = field.unit_vector(dim, i);
        if (raw_multiply(field, dim, c, u, e) != e)
            out.push_back("left unit law fails at basis element " + std::to_string(i));
        if (raw_multiply(field, dim, c, e, u) != e)
            out.push_back("right unit law fails at basis element " + std::to_string(i));
    }
    return out;
}

FDAlgebra::FDAlgebra(Field field, std::size_t dim, const Vec& structure, const Vec& unit,
                     std::vector<std::string> basis_names)
    : field_(field), dim_(dim), names_(std::move(basis_names)) {
    auto failures = axiom_failures(field, dim, structure, unit);
    if (!failures.empty()) {
        std::string what = "not a unital associative algebra: " + failures.front();
        throw ValidationError(what, std::move(failures));
    }
    structure_ = field.reduce(structure);
    unit_ = field.reduce(unit);
    if (!names_.empty() && names_.size() != dim)
        throw InputError("basis name count does not match dimension");
    if (names_.empty())
        for (std::size_t i = 0; i < dim; ++i)
            names_.push_back("e" + std::to_string(i));
}

void FDAlgebra::check_length(const Vec& x) const {
    if (x.size() != dim_)
        throw InputError("element has " + std::to_string(x.size()) + " coordinates, algebra dim is " +
                         std::to_string(dim_));
}

Vec FDAlgebra::multiply(const Vec& x, const Vec& y) const {
    check_length(x);
    check_length(y);
    return raw_multiply(field_, dim_, structure_, x, y);
}

Vec FDAlgebra::bracket(const Vec& x, const Vec& y) const {
    return field_.reduce(sub(multiply(x, y), multiply(y, x)));
}

Matrix FDAlgebra::left_mult(const Vec& x) const {
    check_length(x);
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        m.set_column(j, multiply(x, basis_vector(j)));
    return m;
}

Matrix FDAlgebra::right_mult(const Vec& x) const {
    check_length(x);
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        m.set_column(j, multiply(basis_vector(j), x));
    return m;
}

void FDAlgebra::declare_idempotent(const Vec& e) {
    check_length(e);
    Vec r = field_.reduce(e);
    if (multiply(r, r) != r)
        throw InputError("declared idempotent " + to_string(r) + " does not satisfy e^2 = e");
    if (std::find(declared_.begin(), declared_.end(), r) == declared_.end())
        declared_.push_back(std::move(r));
}

bool FDAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (constant(i, j, k) != constant(j, i, k))
                    return false;
    return true;
}

Subspace center(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Matrix sys(a.field(), 0, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec e = a.basis_vector(i);
        sys = sys.stacked(a.right_mult(e) - a.left_mult(e));
    }
    return kernel(sys);
}

Subspace commutator_span(const FDAlgebra& a) {
    std::vector<Vec> brackets;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            brackets.push_back(a.bracket(a.basis_vector(i), a.basis_vector(j)));
    return Subspace::span(a.field(), a.dim(), brackets);
}

Subspace central_ideal_kernel(const FDAlgebra& a) {
    Subspace z = center(a);
    Matrix rz = z.residual_matrix();
    Matrix sys = rz;
    for (std::size_t i = 0; i < a.dim(); ++i)
        sys = sys.stacked(rz * a.left_mult(a.basis_vector(i)));
    return kernel(sys);
}

bool central_ideal_free(const FDAlgebra& a) { return central_ideal_kernel(a).is_zero(); }

std::optional<Vec> central_ideal_witness(const FDAlgebra& a) {
    Subspace k = central_ideal_kernel(a);
    if (k.is_zero())
        return std::nullopt;
    return k.basis().row(0);
}

Subspace trace_radical(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    Vec tr(d, Scalar(0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
            tr[k] += a.constant(k, l, l);
    Matrix gram(f, d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            Scalar s = 0;
            for (std::size_t k = 0; k < d; ++k)
                s += a.constant(i, j, k) * tr[k];
            gram.set(j, i, s);
        }
    return kernel(gram);
}

namespace {

// First nonzero coordinate equals one.
bool is_projective_rep(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return x == 1;
    return false;
}

bool has_basis_zero_divisor(const FDAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (is_zero(a.multiply(a.basis_vector(i), a.basis_vector(j))))
                return true;
    return false;
}

} // namespace

TriState domain_scan(const FDAlgebra& a, std::uint64_t budget) {
    if (a.dim() == 1)
        return TriState::Holds;
    if (has_basis_zero_divisor(a))
        return TriState::Fails;
    const Field& f = a.field();
    for (const auto& e : a.declared_idempotents())
        if (!is_zero(e) && e != a.unit())
            return TriState::Fails;
    if (f.is_finite() && field_power(f, a.dim()) <= budget) {
        bool zero_divisor = false;
        enumerate_vectors(f, a.dim(), [&](const Vec& x) {
            if (!is_projective_rep(x))
                return true;
            if (rank(a.left_mult(x)) < a.dim()) {
                zero_divisor = true;
                return false;
            }
            return true;
        });
        return tri(!zero_divisor);
    }
    // A nonzero radical element is nilpotent, hence a zero divisor.
    if (f.characteristic() == 0 && !trace_radical(a).is_zero())
        return TriState::Fails;
    return TriState::Unknown;
}

IdempotentScan idempotents(const FDAlgebra& a, std::uint64_t budget) {
    const Field& f = a.field();
    IdempotentScan scan;
    if (f.is_finite() && field_power(f, a.dim()) <= budget) {
        enumerate_vectors(f, a.dim(), [&](const Vec& x) {
            if (a.multiply(x, x) == x)
                scan.elements.push_back(x);
            return true;
        });
        scan.complete = true;
        return scan;
    }
    std::vector<Vec> found{a.zero(), a.unit()};
    for (const auto& e : a.declared_idempotents())
        if (std::find(found.begin(), found.end(), e) == found.end())
            found.push_back(e);
    std::sort(found.begin(), found.end());
    scan.elements = std::move(found);
    if (a.dim() == 1)
        scan.complete = true;
    else if (f.characteristic() == 0 && trace_radical(a).dim() + 1 == a.dim())
        scan.complete = true;
    return scan;
}

Subspace subalgebra_closure(const FDAlgebra& a, const std::vector<Vec>& generators) {
    Subspace s = Subspace::span(a.field(), a.dim(), generators);
    while (true) {
        auto basis = s.basis_vectors();
        std::vector<Vec> vs = basis;
        for (const auto& x : basis)
            for (const auto& y : basis)
                vs.push_back(a.multiply(x, y));
        Subspace next = Subspace::span(a.field(), a.dim(), vs);
        if (next.dim() == s.dim())
            return s;
        s = std::move(next);
    }
}

Subspace w_subalgebra(const FDAlgebra& a, const std::vector<Vec>& idempotent_list) {
    std::vector<Vec> gens = commutator_span(a).basis_vectors();
    gens.insert(gens.end(), idempotent_list.begin(), idempotent_list.end());
    return subalgebra_closure(a, gens);
}

StructureReport analyze_structure(const FDAlgebra& a, std::uint64_t budget) {
    auto idem = idempotents(a, budget);
    Subspace w = w_subalgebra(a, idem.elements);
    TriState whole = w.is_full() ? TriState::Holds
                                 : (idem.complete ? TriState::Fails : TriState::Unknown);
    auto witness = central_ideal_witness(a);
    return StructureReport{center(a),
                           commutator_span(a),
                           !witness.has_value(),
                           witness,
                           domain_scan(a, budget),
                           std::move(idem),
                           std::move(w),
                           whole};
}

TriState w_equals_algebra(const FDAlgebra& a, std::uint64_t budget) {
    auto idem = idempotents(a, budget);
    Subspace w = w_subalgebra(a, idem.elements);
    if (w.is_full())
        return TriState::Holds;
    return idem.complete ? TriState::Fails : TriState::Unknown;
}

} // namespace liederiv
