#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ccx/crn.hpp"
#include "ccx/diagnostic.hpp"
#include "ccx/templates.hpp"

namespace ccx {

struct SimConfig {
    std::uint64_t seed = 1;
    double horizon = 5000.0;
    long long max_steps = 5'000'000;
    double quiescence_window = 100.0;  // reserved; the exact detector stops at first detection
    RateConfig rates;
    std::vector<std::string> observe;  // empty: observables, else all species

    bool valid() const {
        return horizon > 0 && max_steps > 0 && quiescence_window > 0 &&
               quiescence_window < horizon && rates.valid();
    }
};

enum class StopReason { Quiescent, Horizon, MaxSteps };

const char* stop_reason_name(StopReason reason);

struct TrajectorySample {
    double time;
    std::vector<Count> counts;  // observed species only
};

struct Trajectory {
    std::vector<std::string> observed;  // names matching sample columns
    std::vector<TrajectorySample> samples;
    double final_time = 0.0;
    StopReason stop = StopReason::Quiescent;
    std::vector<Count> final_state;  // full species vector
    long long steps = 0;
};

struct EnsembleSummary {
    int runs = 0;
    std::vector<std::string> observed;
    // Final-count histogram per observed species.
    std::vector<std::map<Count, int>> histograms;
    // Most frequent joint final state and how many runs matched it.
    std::vector<Count> modal_state;
    double modal_fraction = 0.0;
    std::map<StopReason, int> stop_reasons;

    Count mode_of(size_t observable_index) const;
    double fraction_of_mode(size_t observable_index) const;
};

/// Optional per-firing hook: (reaction id, event time). Used by tests that
/// check exact firing sequences.
using EventSink = std::function<void(int, double)>;

/// True iff no non-maintenance reaction can fire now or after the indicator
/// machinery settles (indicators of currently-absent species raised to their
/// cap of one). Maintenance reactions never block quiescence. Indicator
/// bindings are identified structurally from the maintenance reactions.
bool detect_quiescence(const Crn& crn, const std::vector<Count>& state);

/// Gillespie direct method. Time advances by -ln(u1)/a0; the reaction is
/// chosen by a u2-weighted scan in reaction-id order. Deterministic given
/// the seed (mt19937_64, 53-bit uniforms). Stops at quiescence, the horizon,
/// or the step cap.
Trajectory simulate(const Crn& crn, const SimConfig& config, const EventSink& sink = {});

/// Independent trajectories seeded seed, seed+1, ...; results merged by run
/// index, so the summary does not depend on scheduling.
EnsembleSummary run_ensemble(const Crn& crn, const SimConfig& config, int runs);

/// CSV rendering: header `time,name1,...`, one row per sample.
std::variant<std::string, Diagnostic> write_trace_csv(const Trajectory& trajectory,
                                                      const std::vector<std::string>& observe);

/// One `name -> mode (fraction% of N runs)` line per observed species.
std::string format_summary(const EnsembleSummary& summary);

}  // namespace ccx
