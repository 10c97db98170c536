#pragma once

#include "liederiv/components.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liederiv {

enum class TheoremId { DuWang, Domain, StrongFaithful, Main, TrivialCorollary };
const char* to_string(TheoremId id);

struct Hypothesis {
    std::string name;
    TriState value;
};

struct TheoremVerdict {
    TheoremId id;
    std::vector<Hypothesis> hypotheses;
    TriState overall = TriState::Unknown;
    /// Set only when overall is Holds: does G really have the Lie derivation
    /// property?
    std::optional<bool> oracle_agrees;
    /// Free-form remarks (why a verdict is Unknown, extra checks).
    std::vector<std::string> notes;

    /// nullptr when there is no hypothesis of that name.
    const Hypothesis* find(const std::string& name) const;
};

struct TheoremOptions {
    std::uint64_t budget = kDefaultBudget;
    /// "X has the Lie derivation property" is only evaluated on blocks up
    /// to this dimension; larger blocks give Unknown.
    std::size_t lie_property_dim_cap = 6;
};

/// Shared analyses of one GMA reused by all checkers.
class TheoremSuite {
public:
    /// Throws TorsionError in characteristic 2.
    explicit TheoremSuite(const GMAlgebra& g, TheoremOptions options = {});

    const GMAlgebra& gma() const { return oracle_.gma(); }
    const GmaOracle& oracle() const { return oracle_; }
    const StructureReport& structure_a() const { return sa_; }
    const StructureReport& structure_b() const { return sb_; }
    bool lie_property() const { return oracle_.oracle().has_lie_derivation_property(); }

    TheoremVerdict du_wang() const;
    TheoremVerdict domain() const;
    TheoremVerdict strong_faithful() const;
    TheoremVerdict main() const;
    /// PreconditionError unless both pairings vanish.
    TheoremVerdict trivial_corollary() const;
    /// Every checker that applies, in the order above.
    std::vector<TheoremVerdict> all() const;

private:
    TheoremVerdict finish(TheoremId id, std::vector<Hypothesis> hyps, TriState overall) const;
    TriState clause_one() const;
    TriState clause_two() const;
    std::vector<Hypothesis> clause_hypotheses() const;

    TheoremOptions options_;
    GmaOracle oracle_;
    StructureReport sa_, sb_;
    bool m_left_, m_right_;
    TriState m_strong_, n_strong_;
    TriState a_lie_property_, b_lie_property_;
};

TheoremVerdict check_du_wang(const GMAlgebra& g, TheoremOptions o = {});
TheoremVerdict check_domain_theorem(const GMAlgebra& g, TheoremOptions o = {});
TheoremVerdict check_strong_faithful_theorem(const GMAlgebra& g, TheoremOptions o = {});
TheoremVerdict check_main(const GMAlgebra& g, TheoremOptions o = {});
TheoremVerdict check_trivial_corollary(const GMAlgebra& g, TheoremOptions o = {});

/// Per-context tallies of the structural properties of Lie derivations.
struct PropertyTally {
    std::size_t lie_basis = 0;          ///< basis Lie derivations examined
    std::size_t der_basis = 0;          ///< basis derivations examined
    std::size_t roundtrip_failures = 0; ///< reconstruct(extract(L)) != L or (a)-(e) fail
    std::size_t der_failures = 0;       ///< (a')-(d') fail on a derivation
    std::size_t commutator_failures = 0;    ///< faithful M but h vanishes not on commutators
    std::size_t torsion_failures = 0;   ///< h_B(nm) m != m h_A(mn)
    std::size_t criteria_mismatches = 0;
    std::vector<std::string> messages;

    std::size_t total_failures() const {
        return roundtrip_failures + der_failures + commutator_failures + torsion_failures +
               criteria_mismatches;
    }
};

/// Runs the component-level property checks on every basis element of
/// LieDer(G) and Der(G). Failures are counted, never thrown.
PropertyTally check_properties(const GmaOracle& o);

struct FuzzConfig {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    /// Upper bound on the dimension of every block (at most 2 is generated).
    std::size_t max_block_dim = 2;
    std::vector<Field> fields{Field::prime(3), Field::prime(5)};
    std::uint64_t budget = kDefaultBudget;
    bool zero_pairings_only = false;
    /// Also run check_properties on every context.
    bool properties = true;
};

struct GeneratedContext {
    std::string description;
    MoritaContext context;
};

/// Context number `index` of the stream defined by the config. Identical
/// (config, index) always give the same context. Throws TorsionError if a
/// configured field has characteristic 2.
GeneratedContext generate_context(const FuzzConfig& config, std::size_t index);

struct FuzzCase {
    std::size_t index;
    std::string description;
    std::string field;
    BlockIndex dims;
    bool trivial;
    bool m_faithful;
    bool lie_property;
    std::size_t lie_dim;
    std::size_t proper_dim;
    std::vector<std::pair<TheoremId, TriState>> verdicts;
    std::optional<PropertyTally> properties;
};

struct SoundnessViolation {
    std::size_t index;
    TheoremId theorem;
    std::string description;
    EndoMap witness; ///< a non-proper Lie derivation of G
};

struct FuzzReport {
    FuzzConfig config;
    std::vector<FuzzCase> cases;
    std::vector<SoundnessViolation> violations;
    /// Contexts where G has the property but no checker Holds.
    std::vector<std::size_t> completeness_gaps;
    std::size_t property_failures = 0;
};

FuzzReport fuzz(const FuzzConfig& config);

} // namespace liederiv
