#pragma once

#include "ptm/engine.hpp"
#include "ptm/turing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptm {

struct Divergence {
    std::size_t t = 0;
    std::string criterion;
    std::string detail;
};

/// Lock-step run of a machine and its compiled particle method. Index i of
/// every vector belongs to time t = i + 1.
struct CosimReport {
    std::vector<Configuration> tm_trace;
    std::vector<std::string> pm_trace;
    std::vector<pm::StepRecord> measurements;
    std::optional<Divergence> divergence;
    bool halted = false;
    bool ok() const { return !divergence.has_value(); }
};

/// Advances both sides until the machine halts, a criterion fails, or
/// `max_steps` steps have been taken. `criteria(state, config)` returns the
/// first failing criterion as (name, detail), or nullopt.
template <class G, class P, class Criteria>
CosimReport cosimulate(const TuringMachine& tm, const pm::Algorithm<G, P>& alg,
                       pm::State<G, P> state, Configuration config, std::size_t max_steps,
                       Criteria&& criteria) {
    CosimReport report;
    for (std::size_t t = 1;; ++t) {
        report.tm_trace.push_back(config);
        report.pm_trace.push_back(pm::render_state(alg, state));
        pm::StepRecord rec = pm::measure(alg.domains, state, t);

        if (auto failed = criteria(state, config)) {
            report.divergence = Divergence{t, failed->first, failed->second};
            report.measurements.push_back(rec);
            return report;
        }
        ++rec.calls.stop;
        bool pm_stops = alg.stop(state.global);
        if (pm_stops != tm.is_halting(config.state)) {
            report.divergence = Divergence{t, "stop-equivalence",
                                           pm_stops ? "particle method stops, machine does not"
                                                    : "machine halts, particle method does not"};
            report.measurements.push_back(rec);
            return report;
        }
        if (pm_stops || t > max_steps) {
            report.halted = pm_stops;
            report.measurements.push_back(rec);
            return report;
        }
        state = pm::transition_step(alg, state, &rec.calls);
        config = tm_step(tm, config);
        report.measurements.push_back(rec);
    }
}

}  // namespace ptm
