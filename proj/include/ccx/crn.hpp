#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccx {

using Count = long long;

enum class SpeciesKind {
    UserVariable,
    Register,
    Constant,
    SignalStart,
    SignalDone,
    TempPrime,
    AbsenceIndicator,
    DetectionT,
    Fuel,
};

const char* species_kind_name(SpeciesKind kind);

struct Species {
    int id = -1;
    std::string name;
    Count initial_count = 0;
    SpeciesKind kind = SpeciesKind::UserVariable;
};

enum class RateTier { Fast, Slow, VerySlow };

const char* rate_tier_name(RateTier tier);

/// Rate constants for the three tiers. The computed answers must not depend
/// on the exact values, only on the ordering fast > slow > veryslow.
struct RateConfig {
    double fast = 1000.0;
    double slow = 1.0;
    double veryslow = 0.01;

    bool valid() const { return fast > slow && slow > veryslow && veryslow > 0.0; }
    double value(RateTier tier) const {
        switch (tier) {
            case RateTier::Fast: return fast;
            case RateTier::Slow: return slow;
            case RateTier::VerySlow: return veryslow;
        }
        return 0.0;
    }
};

/// One side of a reaction: (species id, stoichiometry >= 1) pairs, merged so
/// each species appears at most once. An empty side encodes the null species.
using SpeciesCoefs = std::vector<std::pair<int, int>>;

struct Reaction {
    SpeciesCoefs reactants;
    SpeciesCoefs products;
    RateTier tier = RateTier::Slow;
    bool is_maintenance = false;
    std::string label;
};

struct StructuralIssue {
    std::string label;
    std::string message;
};

/// Species table + reaction list + initial state; the compilation target.
class Crn {
public:
    std::vector<Species> species;
    std::vector<Reaction> reactions;
    std::vector<int> observables;  // user variables, first-assignment order

    /// Appends a species. Throws std::invalid_argument on duplicate names.
    int add_species(const std::string& name, Count initial, SpeciesKind kind);

    /// Appends a reaction. Duplicate species within one side are merged by
    /// summing stoichiometries. Throws std::invalid_argument on unknown ids
    /// or non-positive stoichiometries.
    int add_reaction(SpeciesCoefs reactants, SpeciesCoefs products, RateTier tier,
                     bool is_maintenance, std::string label);

    int find_species(const std::string& name) const;  // -1 if absent
    bool has_species(const std::string& name) const { return find_species(name) >= 0; }

    std::vector<Count> initial_state() const;

    /// Structural checks: dense ids, unique names, valid reaction references,
    /// positive stoichiometry. Compiled programs must also expose at least
    /// one observable (require_observables).
    std::vector<StructuralIssue> validate(bool require_observables = false) const;

private:
    std::unordered_map<std::string, int> index_;
};

/// Number of distinct reactant combinations C(count, stoich); zero when
/// count < stoich.
double combinations(Count count, int stoich);

/// Stochastic mass-action propensity: rate(tier) * prod_i C(x_i, s_i).
double propensity(const Reaction& reaction, const std::vector<Count>& state,
                  const RateConfig& rates);

/// Applies one firing in place (subtract reactants, add products).
void apply_reaction(const Reaction& reaction, std::vector<Count>& state);

}  // namespace ccx
