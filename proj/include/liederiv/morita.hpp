#pragma once

#include "liederiv/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace liederiv {

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Rank-3 tensor over a field with fixed extents, indexed [i][j][k].
/// Used for module actions and pairings: x_i * y_j = sum_k t[i][j][k] z_k.
class Tensor3 {
public:
    Tensor3(Field field, std::size_t n0, std::size_t n1, std::size_t n2);
    Tensor3(Field field, std::size_t n0, std::size_t n1, std::size_t n2, const Vec& flat);

    const Field& field() const { return field_; }
    std::size_t extent(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n1_ + j) * n2_ + k];
    }
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
    const Vec& data() const { return data_; }

    /// Bilinear evaluation: sum_{i,j} x_i y_j t[i][j][:].
    Vec apply(const Vec& x, const Vec& y) const;
    bool is_zero() const { return liederiv::is_zero(data_); }
    Tensor3 scaled(const Scalar& s) const;
    bool operator==(const Tensor3& o) const {
        return field_ == o.field_ && n0_ == o.n0_ && n1_ == o.n1_ && n2_ == o.n2_ && data_ == o.data_;
    }

private:
    Field field_;
    std::size_t n0_, n1_, n2_;
    Vec data_;
};

/// An (A, B)-bimodule given by action tensors:
///   a_i * m_j = sum_k left[i][j][k] m_k,   m_j * b_i = sum_k right[j][i][k] m_k.
class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, Tensor3 left_action,
             Tensor3 right_action);

    /// The zero module.
    static Bimodule zero(AlgebraPtr left, AlgebraPtr right);

    const FDAlgebra& left_algebra() const { return *left_; }
    const FDAlgebra& right_algebra() const { return *right_; }
    const AlgebraPtr& left_ptr() const { return left_; }
    const AlgebraPtr& right_ptr() const { return right_; }
    std::size_t dim() const { return dim_; }
    const Field& field() const { return left_->field(); }
    const Tensor3& left_action() const { return left_action_; }
    const Tensor3& right_action() const { return right_action_; }

    Vec act_left(const Vec& a, const Vec& m) const { return left_action_.apply(a, m); }
    Vec act_right(const Vec& m, const Vec& b) const { return right_action_.apply(m, b); }
    /// Matrix of m -> a m.
    Matrix left_operator(const Vec& a) const;
    /// Matrix of m -> m b.
    Matrix right_operator(const Vec& b) const;
    Vec basis_vector(std::size_t i) const { return field().unit_vector(dim_, i); }

private:
    AlgebraPtr left_, right_;
    std::size_t dim_;
    Tensor3 left_action_, right_action_;
};

/// Per-identity validation outcome. Each failure names the identity and the
/// basis indices where it breaks.
struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate_bimodule(const Bimodule& m);

/// (A, B, M, N, phi, psi): M is an (A,B)-bimodule, N a (B,A)-bimodule,
/// phi: M x N -> A and psi: N x M -> B stored as tensors phi[m][n][a],
/// psi[n][m][b]. Construction does not validate; see validate_context.
struct MoritaContext {
    AlgebraPtr A, B;
    Bimodule M, N;
    Tensor3 phi, psi;

    const Field& field() const { return A->field(); }
    Vec pair_mn(const Vec& m, const Vec& n) const { return phi.apply(m, n); }
    Vec pair_nm(const Vec& n, const Vec& m) const { return psi.apply(n, m); }
};

/// Builds a context with zero pairings.
MoritaContext make_trivial_context(AlgebraPtr A, AlgebraPtr B, Bimodule M, Bimodule N);

/// Bimodule axioms of M and N, balance and homomorphism identities of both
/// pairings, and both diagram identities, all on basis tuples.
ValidationReport validate_context(const MoritaContext& c);

/// Same as validate_context but throws ValidationError on failure.
void require_valid(const MoritaContext& c);

struct FaithfulnessReport {
    bool left_faithful;  ///< a M = 0 implies a = 0
    bool right_faithful; ///< M b = 0 implies b = 0
    TriState strongly_faithful;
    bool two_torsion_free;
    bool faithful() const { return left_faithful && right_faithful; }
};

bool left_faithful(const Bimodule& m);
bool right_faithful(const Bimodule& m);

/// "a m = 0 implies a = 0 or m = 0". Exact when dim A or dim M is 1, or over
/// GF(p) within budget; otherwise Fails on a basis witness, else Unknown.
TriState left_no_zero_action(const Bimodule& m, std::uint64_t budget = kDefaultBudget);
/// "m b = 0 implies m = 0 or b = 0", same rules.
TriState right_no_zero_action(const Bimodule& m, std::uint64_t budget = kDefaultBudget);

/// Either (right faithful and left_no_zero_action) or (left faithful and
/// right_no_zero_action).
TriState strongly_faithful(const Bimodule& m, std::uint64_t budget = kDefaultBudget);

FaithfulnessReport faithfulness(const MoritaContext& c, std::uint64_t budget = kDefaultBudget);
bool two_torsion_free(const MoritaContext& c);

} // namespace liederiv
