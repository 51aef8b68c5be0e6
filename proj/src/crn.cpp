#include "ccx/crn.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccx {

const char* species_kind_name(SpeciesKind kind) {
    switch (kind) {
        case SpeciesKind::UserVariable: return "user-variable";
        case SpeciesKind::Register: return "register";
        case SpeciesKind::Constant: return "constant";
        case SpeciesKind::SignalStart: return "signal-start";
        case SpeciesKind::SignalDone: return "signal-done";
        case SpeciesKind::TempPrime: return "temp-prime";
        case SpeciesKind::AbsenceIndicator: return "absence-indicator";
        case SpeciesKind::DetectionT: return "detection-t";
        case SpeciesKind::Fuel: return "fuel";
    }
    return "?";
}

const char* rate_tier_name(RateTier tier) {
    switch (tier) {
        case RateTier::Fast: return "fast";
        case RateTier::Slow: return "slow";
        case RateTier::VerySlow: return "veryslow";
    }
    return "?";
}

int Crn::add_species(const std::string& name, Count initial, SpeciesKind kind) {
    if (name.empty()) throw std::invalid_argument("species name must not be empty");
    if (initial < 0) throw std::invalid_argument("initial count must be non-negative: " + name);
    if (index_.count(name)) throw std::invalid_argument("duplicate species name: " + name);
    int id = static_cast<int>(species.size());
    species.push_back(Species{id, name, initial, kind});
    index_.emplace(name, id);
    return id;
}

namespace {

ccx::SpeciesCoefs merge_coefs(SpeciesCoefs side, size_t species_count) {
    std::sort(side.begin(), side.end());
    SpeciesCoefs merged;
    for (const auto& [id, stoich] : side) {
        if (id < 0 || static_cast<size_t>(id) >= species_count)
            throw std::invalid_argument("reaction references unknown species id " + std::to_string(id));
        if (stoich < 1)
            throw std::invalid_argument("stoichiometry must be >= 1");
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += stoich;
        else
            merged.emplace_back(id, stoich);
    }
    return merged;
}

}  // namespace

int Crn::add_reaction(SpeciesCoefs reactants, SpeciesCoefs products, RateTier tier,
                      bool is_maintenance, std::string label) {
    Reaction r;
    r.reactants = merge_coefs(std::move(reactants), species.size());
    r.products = merge_coefs(std::move(products), species.size());
    r.tier = tier;
    r.is_maintenance = is_maintenance;
    r.label = std::move(label);
    reactions.push_back(std::move(r));
    return static_cast<int>(reactions.size()) - 1;
}

int Crn::find_species(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Count> Crn::initial_state() const {
    std::vector<Count> state(species.size());
    for (const auto& s : species) state[s.id] = s.initial_count;
    return state;
}

std::vector<StructuralIssue> Crn::validate(bool require_observables) const {
    std::vector<StructuralIssue> issues;
    for (size_t i = 0; i < species.size(); ++i) {
        const auto& s = species[i];
        if (s.id != static_cast<int>(i))
            issues.push_back({s.name, "species id not dense"});
        if (s.initial_count < 0)
            issues.push_back({s.name, "negative initial count"});
        auto it = index_.find(s.name);
        if (it == index_.end() || it->second != s.id)
            issues.push_back({s.name, "species name/index mismatch"});
    }
    for (const auto& r : reactions) {
        for (const auto* side : {&r.reactants, &r.products}) {
            for (const auto& [id, stoich] : *side) {
                if (id < 0 || static_cast<size_t>(id) >= species.size())
                    issues.push_back({r.label, "reaction references unknown species"});
                if (stoich < 1)
                    issues.push_back({r.label, "non-positive stoichiometry"});
            }
        }
    }
    for (int id : observables) {
        if (id < 0 || static_cast<size_t>(id) >= species.size())
            issues.push_back({"observables", "observable references unknown species"});
    }
    if (require_observables && observables.empty())
        issues.push_back({"observables", "compiled program exposes no observables"});
    return issues;
}

double combinations(Count count, int stoich) {
    if (count < stoich) return 0.0;
    double result = 1.0;
    for (int k = 0; k < stoich; ++k) result *= static_cast<double>(count - k) / (k + 1);
    return result;
}

double propensity(const Reaction& reaction, const std::vector<Count>& state,
                  const RateConfig& rates) {
    double a = rates.value(reaction.tier);
    for (const auto& [id, stoich] : reaction.reactants) {
        a *= combinations(state[id], stoich);
        if (a == 0.0) return 0.0;
    }
    return a;
}

void apply_reaction(const Reaction& reaction, std::vector<Count>& state) {
    for (const auto& [id, stoich] : reaction.reactants) state[id] -= stoich;
    for (const auto& [id, stoich] : reaction.products) state[id] += stoich;
}

}  // namespace ccx
