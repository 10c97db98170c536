#pragma once

#include "liederiv/derivations.hpp"
#include "liederiv/gma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liederiv {

/// Everything about G that the component-level checks reuse: centers,
/// commutators, faithfulness and the exact Lie oracle on G.
class GmaOracle {
public:
    explicit GmaOracle(const GMAlgebra& g);

    const GMAlgebra& gma() const { return *g_; }
    const CenterAnalysis& centers() const { return centers_; }
    const LieOracle& oracle() const { return oracle_; }
    const Subspace& center_a() const { return center_a_; }
    const Subspace& center_b() const { return center_b_; }
    const Subspace& commutators_a() const { return comm_a_; }
    const Subspace& commutators_b() const { return comm_b_; }
    bool m_faithful() const { return m_faithful_; }

    /// a ⊕ b in Z(G).
    bool central_pair(const Vec& a, const Vec& b) const;

private:
    const GMAlgebra* g_;
    CenterAnalysis centers_;
    LieOracle oracle_;
    Subspace center_a_, center_b_, comm_a_, comm_b_;
    bool m_faithful_;
};

/// Components of a Lie derivation of G:
///   L(a,m,n,b) = ( P(a) - m n0 - m0 n + hB(b),   a m0 - m0 b + f(m),
///                  n0 a - b n0 + g(n),          hA(a) + n0 m + n m0 + Q(b) ).
/// Linear maps are matrices acting on block coordinates.
struct LieComponents {
    Matrix P;   ///< A -> A
    Matrix Q;   ///< B -> B
    Matrix f;   ///< M -> M
    Matrix g;   ///< N -> N
    Matrix h_A; ///< A -> Z(B)
    Matrix h_B; ///< B -> Z(A)
    Vec m0;
    Vec n0;

    bool operator==(const LieComponents& o) const {
        return P == o.P && Q == o.Q && f == o.f && g == o.g && h_A == o.h_A && h_B == o.h_B &&
               m0 == o.m0 && n0 == o.n0;
    }
};

/// Components of a derivation (the Lie presentation with h_A = h_B = 0).
struct DerComponents {
    Matrix P, Q, f, g;
    Vec m0, n0;
};

/// Components of a center-valued map vanishing on commutators:
///   tau(a,m,n,b) = (ell_A(a) + h_B(b), 0, 0, h_A(a) + ell_B(b)).
struct TauComponents {
    Matrix ell_A; ///< A -> Z(A)
    Matrix h_B;   ///< B -> Z(A)
    Matrix h_A;   ///< A -> Z(B)
    Matrix ell_B; ///< B -> Z(B)
};

struct ConditionCheck {
    ConditionCheck(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;
    bool all_passed() const;
    /// nullptr when no check has that name.
    const ConditionCheck* find(const std::string& name) const;
    std::vector<std::string> failed_names() const;
};

/// Reads the components from images of block basis vectors, probing a, b, m,
/// n in that order. No validation.
LieComponents read_lie_components(const GMAlgebra& g, const EndoMap& l);

/// Precondition: L is a Lie derivation (PreconditionError otherwise).
/// Re-assembles L from the components and validates (a)-(e); either failing
/// raises ConsistencyError.
LieComponents extract_lie_components(const GmaOracle& o, const EndoMap& l);
LieComponents extract_lie_components(const GMAlgebra& g, const EndoMap& l);

/// Precondition: D is a derivation. Validates (a')-(d').
DerComponents extract_der_components(const GmaOracle& o, const EndoMap& d);
/// Precondition: tau is center valued and vanishes on commutators.
/// Validates (a'')-(b'').
TauComponents extract_tau_components(const GmaOracle& o, const EndoMap& tau);

EndoMap reconstruct_lie(const GMAlgebra& g, const LieComponents& c);
EndoMap reconstruct_der(const GMAlgebra& g, const DerComponents& c);
EndoMap reconstruct_tau(const GMAlgebra& g, const TauComponents& c);

/// Checks "(a)".."(e)" plus "h-central" (h_B(B) in Z(A), h_A(A) in Z(B)).
ConditionReport validate_conditions(const GmaOracle& o, const LieComponents& c);
/// Checks "(a')".."(d')".
ConditionReport validate_conditions(const GmaOracle& o, const DerComponents& c);
/// Checks "ranges", "commutators", "(a'')", "(b'')".
ConditionReport validate_conditions(const GmaOracle& o, const TauComponents& c);

struct EllMaps {
    Matrix ell_A; ///< phi^{-1} o h_A
    Matrix ell_B; ///< phi o h_B
};

struct EllBuild {
    std::optional<EllMaps> maps;
    std::string failure; ///< set when maps is empty
};

/// ell_A = phi^{-1} o h_A and ell_B = phi o h_B. Fails when M is not faithful
/// or a basis image of h_A / h_B leaves pi_B(Z(G)) / pi_A(Z(G)).
EllBuild build_ell_maps(const GmaOracle& o, const LieComponents& c);

enum class Verdict { Proper, NotProper, Inconclusive };
const char* to_string(Verdict v);

struct CriteriaReport {
    ConditionReport necessary;               ///< "(A')", "(B')"
    std::optional<ConditionReport> theorem;  ///< "(A)", "(B)", "(C)" once ell maps exist
    bool m_faithful = false;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ProperWitness> witness;    ///< D + tau built from the components
    bool oracle_proper = false;
    bool oracle_agrees = true;
};

/// Evaluates (A') and (B'). If either fails, L is not proper. If both hold
/// and M is faithful, builds ell maps, checks (A)(B)(C) and assembles an
/// explicit D + tau. With M not faithful and both holding the verdict is
/// Inconclusive. Any disagreement with the oracle raises ConsistencyError.
CriteriaReport properness_criteria(const GmaOracle& o, const EndoMap& l);
CriteriaReport properness_criteria(const GmaOracle& o, const EndoMap& l, const LieComponents& c);

/// ell: A -> Z(A) with P - ell a derivation of A, if one exists.
std::optional<Matrix> find_ell_a(const FDAlgebra& a, const Matrix& p);

struct VSubalgebra {
    Subspace v;
    bool contains_commutators;
    bool contains_idempotents;
    bool within_preimage;                 ///< V_A inside h_A^{-1}(pi_B(Z(G)))
    std::optional<bool> equals_preimage;  ///< evaluated when M is faithful
};

/// V_A = {a : ell_A(a) ⊕ h_A(a) in Z(G)}. Precondition: ell_A maps into Z(A)
/// and P - ell_A is a derivation.
VSubalgebra v_subalgebra(const GmaOracle& o, const Matrix& ell_a, const LieComponents& c,
                         std::uint64_t budget = kDefaultBudget);

} // namespace liederiv
