#pragma once

#include "liederiv/field.hpp"
#include "liederiv/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liederiv {

/// Three-valued answer for properties that are only semidecidable over
/// infinite fields (domain, strong faithfulness, idempotent enumeration).
enum class TriState { Holds, Fails, Unknown };

TriState tri(bool b);
TriState tri_and(TriState a, TriState b);
TriState tri_or(TriState a, TriState b);
const char* to_string(TriState t);

/// Default number of field elements an exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. Elements are coordinate
/// columns in the fixed basis.
class FDAlgebra {
public:
    /// `structure` is the flattened tensor, index (i*dim + j)*dim + k.
    /// Throws ValidationError listing every failed associativity triple or
    /// unit law.
    FDAlgebra(Field field, std::size_t dim, const Vec& structure, const Vec& unit,
              std::vector<std::string> basis_names = {});

    /// Failures of associativity on basis triples and of the unit laws, in
    /// index order. Empty means the data defines a unital algebra.
    static std::vector<std::string> axiom_failures(const Field& field, std::size_t dim,
                                                   const Vec& structure, const Vec& unit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }
    const Vec& structure() const { return structure_; }
    const Vec& unit() const { return unit_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    Vec basis_vector(std::size_t i) const { return field_.unit_vector(dim_, i); }
    Vec zero() const { return field_.zeros(dim_); }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of y -> x y.
    Matrix left_mult(const Vec& x) const;
    /// Matrix of y -> y x.
    Matrix right_mult(const Vec& x) const;

    /// Idempotents supplied by the user; each satisfies e^2 = e.
    const std::vector<Vec>& declared_idempotents() const { return declared_; }
    void declare_idempotent(const Vec& e);

    bool is_commutative() const;

private:
    void check_length(const Vec& x) const;

    Field field_;
    std::size_t dim_;
    Vec structure_;
    Vec unit_;
    std::vector<std::string> names_;
    std::vector<Vec> declared_;
};

Subspace center(const FDAlgebra& a);
Subspace commutator_span(const FDAlgebra& a);

/// K = {c in Z(A) : A c subset Z(A)}. For unital A the ideal generated by a
/// central c is A c, so K = 0 exactly when A has no nonzero central ideal.
Subspace central_ideal_kernel(const FDAlgebra& a);
bool central_ideal_free(const FDAlgebra& a);
/// A nonzero element of K, when one exists.
std::optional<Vec> central_ideal_witness(const FDAlgebra& a);

/// {x : Tr(L_{xy}) = 0 for all y}. In characteristic 0 this is the
/// Jacobson radical.
Subspace trace_radical(const FDAlgebra& a);

TriState domain_scan(const FDAlgebra& a, std::uint64_t budget = kDefaultBudget);

struct IdempotentScan {
    std::vector<Vec> elements; ///< canonical order, no duplicates
    bool complete = false;     ///< false: further idempotents may exist
};

/// Over GF(p) within budget: exhaustive. Otherwise {0, 1} plus declared
/// idempotents; over Q the list is certified complete when A modulo its
/// radical is one-dimensional (then only 0 and 1 exist).
IdempotentScan idempotents(const FDAlgebra& a, std::uint64_t budget = kDefaultBudget);

/// Smallest subspace containing the generators and closed under products.
Subspace subalgebra_closure(const FDAlgebra& a, const std::vector<Vec>& generators);
/// Subalgebra generated by all commutators and the given idempotents.
Subspace w_subalgebra(const FDAlgebra& a, const std::vector<Vec>& idempotent_list);

struct StructureReport {
    Subspace center;
    Subspace commutator_span;
    bool central_ideal_free;
    std::optional<Vec> central_ideal_witness;
    TriState domain;
    IdempotentScan idempotents;
    Subspace w_closure;
    /// Holds when the closure is everything; Fails only when the idempotent
    /// list is complete.
    TriState w_is_whole;
};

StructureReport analyze_structure(const FDAlgebra& a, std::uint64_t budget = kDefaultBudget);

/// W_A = A as a tri-state (see StructureReport::w_is_whole).
TriState w_equals_algebra(const FDAlgebra& a, std::uint64_t budget = kDefaultBudget);

} // namespace liederiv
