#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccx/crn.hpp"
#include "ccx/simulator.hpp"

namespace ccx::testing {

inline std::map<std::string, Count> counts_by_name(const Crn& crn,
                                                   const std::vector<Count>& state) {
    std::map<std::string, Count> out;
    for (const auto& s : crn.species) out[s.name] = state[s.id];
    return out;
}

inline SimConfig quick_config(std::uint64_t seed) {
    SimConfig config;
    config.seed = seed;
    config.horizon = 5000.0;
    return config;
}

/// Runs one standalone module to quiescence and returns the final counts.
inline std::map<std::string, Count> run_to_quiescence(const Crn& crn, std::uint64_t seed) {
    Trajectory traj = simulate(crn, quick_config(seed));
    return counts_by_name(crn, traj.final_state);
}

/// Fraction of seeded runs whose final count of `name` equals `expect`.
inline double fraction_final(const Crn& crn, const std::string& name, Count expect,
                             int runs, std::uint64_t seed) {
    int hits = 0;
    for (int i = 0; i < runs; ++i) {
        auto final = run_to_quiescence(crn, seed + i);
        if (final.at(name) == expect) ++hits;
    }
    return static_cast<double>(hits) / runs;
}

}  // namespace ccx::testing
