#include "ccx/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ccx {

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::Quiescent: return "quiescent";
        case StopReason::Horizon: return "horizon";
        case StopReason::MaxSteps: return "max_steps";
    }
    return "?";
}

namespace {

/// (indicated, indicator) pairs recovered from the maintenance reactions, so
/// the detector also works on CRNs re-read from XML. The consume reaction
/// has the shape indicated + indicator -> indicated.
std::vector<std::pair<int, int>> indicator_pairs(const Crn& crn) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : crn.reactions) {
        if (!r.is_maintenance) continue;
        if (r.reactants.size() != 2 || r.products.size() != 1) continue;
        const auto& [id_a, st_a] = r.reactants[0];
        const auto& [id_b, st_b] = r.reactants[1];
        if (st_a != 1 || st_b != 1 || r.products[0].second != 1) continue;
        int kept = r.products[0].first;
        if (kept == id_a) pairs.emplace_back(id_a, id_b);
        else if (kept == id_b) pairs.emplace_back(id_b, id_a);
    }
    return pairs;
}

bool quiescent_under(const Crn& crn, const std::vector<Count>& state) {
    for (const auto& r : crn.reactions) {
        if (r.is_maintenance) continue;
        bool enabled = true;
        for (const auto& [id, stoich] : r.reactants) {
            if (state[id] < stoich) {
                enabled = false;
                break;
            }
        }
        if (enabled) return false;
    }
    return true;
}

/// 53-bit uniform in [0, 1); independent of the standard library's
/// distribution implementations so trajectories are stable across builds.
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ObservedSet {
    std::vector<std::string> names;
    std::vector<int> ids;
};

ObservedSet resolve_observed(const Crn& crn, const std::vector<std::string>& requested) {
    ObservedSet out;
    if (!requested.empty()) {
        for (const auto& name : requested) {
            int id = crn.find_species(name);
            if (id < 0) throw std::invalid_argument("unknown observable '" + name + "'");
            out.names.push_back(name);
            out.ids.push_back(id);
        }
        return out;
    }
    if (!crn.observables.empty()) {
        for (int id : crn.observables) {
            out.names.push_back(crn.species[id].name);
            out.ids.push_back(id);
        }
        return out;
    }
    for (const auto& s : crn.species) {
        out.names.push_back(s.name);
        out.ids.push_back(s.id);
    }
    return out;
}

}  // namespace

bool detect_quiescence(const Crn& crn, const std::vector<Count>& state) {
    if (!quiescent_under(crn, state)) return false;
    // Hypothetical settled state: absence indicators of currently-absent
    // species will regenerate to their cap, so reactions gated only on such
    // an indicator are still pending.
    std::vector<Count> settled = state;
    for (const auto& [indicated, indicator] : indicator_pairs(crn)) {
        if (state[indicated] == 0 && settled[indicator] < 1) settled[indicator] = 1;
    }
    return quiescent_under(crn, settled);
}

Trajectory simulate(const Crn& crn, const SimConfig& config, const EventSink& sink) {
    if (!config.valid()) throw std::invalid_argument("invalid simulation config");
    const size_t n_reactions = crn.reactions.size();

    ObservedSet observed = resolve_observed(crn, config.observe);
    std::vector<Count> state = crn.initial_state();

    // Per-reaction propensity cache with incremental updates driven by a
    // species -> dependent-reaction index.
    std::vector<double> props(n_reactions, 0.0);
    std::vector<std::vector<int>> dependents(crn.species.size());
    for (size_t i = 0; i < n_reactions; ++i) {
        for (const auto& [id, stoich] : crn.reactions[i].reactants)
            dependents[id].push_back(static_cast<int>(i));
    }
    std::vector<int> net_changed;  // scratch: species whose count changed

    double a0 = 0.0;
    long long nm_active = 0;  // non-maintenance reactions currently enabled
    for (size_t i = 0; i < n_reactions; ++i) {
        props[i] = propensity(crn.reactions[i], state, config.rates);
        a0 += props[i];
        if (props[i] > 0.0 && !crn.reactions[i].is_maintenance) ++nm_active;
    }

    auto indicators = indicator_pairs(crn);
    auto fully_quiescent = [&]() {
        if (nm_active != 0) return false;
        std::vector<Count> settled = state;
        for (const auto& [indicated, indicator] : indicators)
            if (state[indicated] == 0 && settled[indicator] < 1) settled[indicator] = 1;
        return quiescent_under(crn, settled);
    };

    Trajectory traj;
    traj.observed = observed.names;
    auto snapshot = [&](double time) {
        TrajectorySample s;
        s.time = time;
        s.counts.reserve(observed.ids.size());
        for (int id : observed.ids) s.counts.push_back(state[id]);
        traj.samples.push_back(std::move(s));
    };

    std::mt19937_64 rng(config.seed);
    double t = 0.0;
    snapshot(0.0);

    auto finish = [&](StopReason reason) {
        traj.final_time = t;
        traj.stop = reason;
        traj.final_state = state;
        return traj;
    };

    if (fully_quiescent()) return finish(StopReason::Quiescent);

    long long refresh_countdown = 1 << 14;
    while (true) {
        if (a0 <= 0.0) return finish(StopReason::Quiescent);

        double u1 = 1.0 - uniform53(rng);  // (0, 1]
        double dt = -std::log(u1) / a0;
        if (t + dt > config.horizon) {
            t = config.horizon;
            return finish(StopReason::Horizon);
        }
        t += dt;

        // Weighted scan in reaction-id order.
        double threshold = uniform53(rng) * a0;
        double cum = 0.0;
        int fired = -1;
        int last_positive = -1;
        for (size_t i = 0; i < n_reactions; ++i) {
            if (props[i] <= 0.0) continue;
            last_positive = static_cast<int>(i);
            cum += props[i];
            if (threshold < cum) {
                fired = static_cast<int>(i);
                break;
            }
        }
        if (fired < 0) fired = last_positive;  // float drift guard
        if (fired < 0) return finish(StopReason::Quiescent);

        const Reaction& rx = crn.reactions[fired];
        net_changed.clear();
        for (const auto& [id, stoich] : rx.reactants) {
            state[id] -= stoich;
            net_changed.push_back(id);
        }
        for (const auto& [id, stoich] : rx.products) {
            state[id] += stoich;
            net_changed.push_back(id);
        }
        std::sort(net_changed.begin(), net_changed.end());
        net_changed.erase(std::unique(net_changed.begin(), net_changed.end()), net_changed.end());

        bool observed_changed = false;
        for (int id : net_changed) {
            for (int j : dependents[id]) {
                double fresh = propensity(crn.reactions[j], state, config.rates);
                if (fresh != props[j]) {
                    if (!crn.reactions[j].is_maintenance) {
                        if (props[j] > 0.0 && fresh == 0.0) --nm_active;
                        else if (props[j] == 0.0 && fresh > 0.0) ++nm_active;
                    }
                    a0 += fresh - props[j];
                    props[j] = fresh;
                }
            }
        }
        if (!rx.is_maintenance) {
            for (size_t k = 0; k < observed.ids.size(); ++k) {
                Count now = state[observed.ids[k]];
                if (traj.samples.back().counts[k] != now) {
                    observed_changed = true;
                    break;
                }
            }
        }
        if (observed_changed) snapshot(t);
        if (sink) sink(fired, t);

        ++traj.steps;
        if (--refresh_countdown == 0) {
            // Periodic exact rebuild bounds float drift in the running sum.
            refresh_countdown = 1 << 14;
            a0 = 0.0;
            for (size_t i = 0; i < n_reactions; ++i) a0 += props[i];
        }
        if (fully_quiescent()) return finish(StopReason::Quiescent);
        if (traj.steps >= config.max_steps) return finish(StopReason::MaxSteps);
    }
}

Count EnsembleSummary::mode_of(size_t observable_index) const {
    const auto& hist = histograms.at(observable_index);
    Count best = 0;
    int best_n = -1;
    for (const auto& [value, n] : hist) {
        if (n > best_n) {
            best = value;
            best_n = n;
        }
    }
    return best;
}

double EnsembleSummary::fraction_of_mode(size_t observable_index) const {
    const auto& hist = histograms.at(observable_index);
    Count mode = mode_of(observable_index);
    auto it = hist.find(mode);
    if (it == hist.end() || runs == 0) return 0.0;
    return static_cast<double>(it->second) / runs;
}

EnsembleSummary run_ensemble(const Crn& crn, const SimConfig& config, int runs) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    ObservedSet observed = resolve_observed(crn, config.observe);

    std::vector<std::vector<Count>> finals(runs);
    std::vector<StopReason> reasons(runs, StopReason::Quiescent);

    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::max(1, std::min<int>(runs, hw == 0 ? 1 : static_cast<int>(hw)));
    std::atomic<int> next{0};
    auto work = [&]() {
        for (int i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) {
            SimConfig run_config = config;
            run_config.seed = config.seed + static_cast<std::uint64_t>(i);
            Trajectory traj = simulate(crn, run_config);
            std::vector<Count> counts;
            counts.reserve(observed.ids.size());
            for (int id : observed.ids) counts.push_back(traj.final_state[id]);
            finals[i] = std::move(counts);
            reasons[i] = traj.stop;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    EnsembleSummary summary;
    summary.runs = runs;
    summary.observed = observed.names;
    summary.histograms.resize(observed.ids.size());
    std::map<std::vector<Count>, int> joint;
    for (int i = 0; i < runs; ++i) {
        for (size_t k = 0; k < finals[i].size(); ++k) summary.histograms[k][finals[i][k]]++;
        joint[finals[i]]++;
        summary.stop_reasons[reasons[i]]++;
    }
    int best = -1;
    for (const auto& [state, n] : joint) {
        if (n > best) {
            best = n;
            summary.modal_state = state;
        }
    }
    summary.modal_fraction = runs > 0 ? static_cast<double>(best) / runs : 0.0;
    return summary;
}

namespace {

std::string format_time(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", t);
    return buf;
}

std::string format_percent(double fraction) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", fraction * 100.0);
    return buf;
}

}  // namespace

std::variant<std::string, Diagnostic> write_trace_csv(const Trajectory& trajectory,
                                                      const std::vector<std::string>& observe) {
    const auto& names = observe.empty() ? trajectory.observed : observe;
    std::vector<size_t> columns;
    for (const auto& name : names) {
        auto it = std::find(trajectory.observed.begin(), trajectory.observed.end(), name);
        if (it == trajectory.observed.end())
            return Diagnostic{0, "unknown observable '" + name + "'"};
        columns.push_back(static_cast<size_t>(it - trajectory.observed.begin()));
    }
    std::ostringstream os;
    os << "time";
    for (const auto& name : names) os << ',' << name;
    os << '\n';
    for (const auto& sample : trajectory.samples) {
        os << format_time(sample.time);
        for (size_t c : columns) os << ',' << sample.counts[c];
        os << '\n';
    }
    return os.str();
}

std::string format_summary(const EnsembleSummary& summary) {
    std::ostringstream os;
    for (size_t k = 0; k < summary.observed.size(); ++k) {
        os << summary.observed[k] << " -> " << summary.mode_of(k) << " ("
           << format_percent(summary.fraction_of_mode(k)) << "% of " << summary.runs
           << " runs)\n";
    }
    return os.str();
}

}  // namespace ccx
