#pragma once

#include "liederiv/morita.hpp"

#include <optional>

namespace liederiv {

/// Coordinate ranges of the four blocks, fixed order (A, M, N, B).
struct BlockIndex {
    std::size_t dim_a, dim_m, dim_n, dim_b;
    std::size_t a_begin() const { return 0; }
    std::size_t m_begin() const { return dim_a; }
    std::size_t n_begin() const { return dim_a + dim_m; }
    std::size_t b_begin() const { return dim_a + dim_m + dim_n; }
    std::size_t total() const { return dim_a + dim_m + dim_n + dim_b; }
};

/// Element of G split into its blocks.
struct BlockElement {
    Vec a, m, n, b;
};

/// The generalized matrix algebra [[A, M], [N, B]] of a Morita context.
class GMAlgebra {
public:
    /// Throws ValidationError carrying the context report when the context is
    /// invalid.
    explicit GMAlgebra(MoritaContext context);

    const MoritaContext& context() const { return context_; }
    const FDAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const BlockIndex& blocks() const { return blocks_; }
    const Field& field() const { return context_.field(); }
    std::size_t dim() const { return blocks_.total(); }
    const FDAlgebra& A() const { return *context_.A; }
    const FDAlgebra& B() const { return *context_.B; }
    const Bimodule& M() const { return context_.M; }
    const Bimodule& N() const { return context_.N; }

    /// Both off-diagonal modules are zero, so G = A x B.
    bool is_direct_sum() const { return blocks_.dim_m == 0 && blocks_.dim_n == 0; }

    BlockElement project(const Vec& x) const;
    Vec embed(const Vec& a, const Vec& m, const Vec& n, const Vec& b) const;
    Vec embed(const BlockElement& e) const { return embed(e.a, e.m, e.n, e.b); }
    Vec embed_a(const Vec& a) const;
    Vec embed_m(const Vec& m) const;
    Vec embed_n(const Vec& n) const;
    Vec embed_b(const Vec& b) const;

private:
    MoritaContext context_;
    BlockIndex blocks_;
    AlgebraPtr algebra_;
};

/// Builds the block structure tensor
/// (a,m,n,b)(a',m',n',b') = (aa' + mn', am' + mb', na' + bn', nm' + bb').
GMAlgebra assemble(MoritaContext context);

/// a ⊕ b is central in G iff a, b are central, am = mb and na = bn.
struct CenterAnalysis {
    Subspace z_g;
    Subspace pi_a_z;
    Subspace pi_b_z;
    bool pi_a_eq_za;
    bool pi_b_eq_zb;
    /// Matrix of phi from pi_a_z coordinates to pi_b_z coordinates; present
    /// when M is faithful.
    std::optional<Matrix> phi_iso;

    /// phi(a) in B coordinates; a must lie in pi_a_z.
    Vec phi(const Vec& a) const;
    /// phi^{-1}(b) in A coordinates; b must lie in pi_b_z.
    Vec phi_inverse(const Vec& b) const;
};

/// Throws ConsistencyError if a central element has a nonzero off-diagonal
/// block or the constructed phi is not a multiplicative bijection with
/// a m = m phi(a) and phi(a) n = n a.
CenterAnalysis center_analysis(const GMAlgebra& g);

/// Peirce context of A at a nontrivial idempotent p: (pAp, qAq, pAq, qAp)
/// with actions and pairings induced by multiplication; q = 1 - p.
/// Block bases are the RREF bases of the corresponding subspaces of A.
struct PeirceDecomposition {
    MoritaContext context;
    /// Columns: A-coordinates of the (A, M, N, B) block basis vectors; the
    /// map G -> A, x -> T x is an algebra isomorphism.
    Matrix to_ambient;
};

PeirceDecomposition peirce_decomposition(const FDAlgebra& a, const Vec& p);
MoritaContext peirce(const FDAlgebra& a, const Vec& p);

/// Checks that x -> T x is an isomorphism from `source` onto `target`:
/// T invertible and T(e_i e_j) = T(e_i) T(e_j) for all basis pairs.
bool is_isomorphism(const FDAlgebra& source, const FDAlgebra& target, const Matrix& t);

/// Both pairings vanish identically (MN = 0 = NM).
bool is_trivial(const MoritaContext& c);

} // namespace liederiv
