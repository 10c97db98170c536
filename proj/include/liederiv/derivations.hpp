#pragma once

#include "liederiv/algebra.hpp"

#include <optional>
#include <utility>

namespace liederiv {

/// Linear self-map of an algebra, as a matrix acting on coordinate columns
/// (column j is the image of e_j).
struct EndoMap {
    Matrix matrix;

    std::size_t dim() const { return matrix.rows(); }
    Vec operator()(const Vec& x) const { return matrix.apply(x); }
    bool operator==(const EndoMap& o) const { return matrix == o.matrix; }
    bool operator!=(const EndoMap& o) const { return !(*this == o); }

    static EndoMap zero(const Field& f, std::size_t d) { return EndoMap{Matrix(f, d, d)}; }
};

/// Subspace of End(A) under the row-major flattening D[r][c] -> r*d + c.
class MapSpace {
public:
    MapSpace(std::size_t algebra_dim, Subspace space);

    std::size_t algebra_dim() const { return dim_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    std::vector<EndoMap> basis_maps() const;
    bool contains(const EndoMap& m) const { return space_.contains(m.matrix.flatten()); }
    bool contains(const MapSpace& o) const { return space_.contains(o.space_); }

private:
    std::size_t dim_;
    Subspace space_;
};

/// Basis pair (i, j) where an identity breaks, if any.
using Violation = std::optional<std::pair<std::size_t, std::size_t>>;

/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on all basis pairs.
Violation derivation_violation(const FDAlgebra& a, const EndoMap& d);
/// L([e_i,e_j]) = [L(e_i), e_j] + [e_i, L(e_j)] on all basis pairs.
Violation lie_derivation_violation(const FDAlgebra& a, const EndoMap& l);
bool is_derivation(const FDAlgebra& a, const EndoMap& d);
bool is_lie_derivation(const FDAlgebra& a, const EndoMap& l);
/// tau maps into Z(A) and vanishes on [A, A].
bool is_central_commutator_vanishing(const FDAlgebra& a, const EndoMap& tau);

struct ProperWitness {
    EndoMap derivation;
    EndoMap central; ///< center valued, vanishes on commutators
};

struct ProperDecision {
    bool proper;
    std::optional<ProperWitness> witness;
};

/// Exact oracle for one algebra: Der, LieDer, the tau-space and their sum,
/// computed once and reused. Refuses characteristic 2.
class LieOracle {
public:
    explicit LieOracle(const FDAlgebra& a);

    const FDAlgebra& algebra() const { return *algebra_; }
    const MapSpace& derivations() const { return der_; }
    const MapSpace& lie_derivations() const { return lie_; }
    const MapSpace& tau_maps() const { return tau_; }
    const MapSpace& proper_maps() const { return proper_; }

    /// Throws PreconditionError naming a violated bracket pair when L is not
    /// a Lie derivation. On success the witness is re-validated.
    ProperDecision is_proper(const EndoMap& l) const;
    bool has_lie_derivation_property() const { return proper_.contains(lie_); }

private:
    const FDAlgebra* algebra_;
    MapSpace der_, lie_, tau_, proper_;
};

MapSpace derivation_space(const FDAlgebra& a);
MapSpace lie_derivation_space(const FDAlgebra& a);
MapSpace tau_space(const FDAlgebra& a);
MapSpace proper_space(const FDAlgebra& a);
ProperDecision is_proper(const FDAlgebra& a, const EndoMap& l);
bool has_lie_derivation_property(const FDAlgebra& a);

/// x -> [c, x].
EndoMap inner_derivation(const FDAlgebra& a, const Vec& c);

/// Throws TorsionError in characteristic 2.
void require_two_torsion_free(const Field& f);

} // namespace liederiv
