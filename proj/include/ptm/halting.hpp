#pragma once

// Halting decision for particle methods with finite domains whose evolve
// never produces particles: such a method visits at most M distinct states,
// so its run either stops or revisits a state.

#include "ptm/engine.hpp"
#include "ptm/errors.hpp"
#include "ptm/restrictions.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

namespace ptm::halting {

struct StateBound {
    std::uint64_t m = 0;
    std::uint64_t size_g = 0;
    std::uint64_t size_p = 0;
    std::uint64_t M = 0;
};

/// M = size_g * sum_{j=0..m} size_p^j. Throws BoundOverflow when M does not
/// fit in 64 bits and std::invalid_argument on empty domains.
StateBound bound_M(std::uint64_t size_g, std::uint64_t size_p, std::uint64_t m);

struct HaltingVerdict {
    enum class Kind { Halts, Loops, Exhausted };
    Kind kind = Kind::Exhausted;
    std::size_t t = 0;       // Halts: stop condition first true after t steps
    std::size_t mu = 0;      // Loops: first visit of the repeated state
    std::size_t lambda = 0;  // Loops: cycle length
    std::uint64_t visited = 0;
    std::uint64_t cap = 0;
    std::optional<StateBound> bound;
    bool override_used = false;

    std::string line() const;
};

struct DecideOptions {
    std::optional<std::uint64_t> cap;
    bool override_preconditions = false;
};

namespace detail {
void require_non_increasing(std::size_t before, std::size_t after, std::size_t t);
}

/// Runs the method from `instance` keyed by rendered state. Throws
/// PreconditionViolation when the no-production restrictions fail and no
/// override is given, or when no cap can be determined.
template <class G, class P>
HaltingVerdict decide(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& instance,
                      const DecideOptions& opts = {}) {
    HaltingVerdict v;
    auto report = check::check_t3(alg, check::DomainSampler<G, P>{});
    if (!report.passed()) {
        if (!opts.override_preconditions) {
            std::string why;
            for (const auto& r : report.results)
                if (r.verdict != check::Verdict::Pass)
                    why += (why.empty() ? "" : "; ") + std::string(check::name(r.restriction)) + ": " +
                           (r.counterexample ? r.counterexample->rendered : r.note);
            throw PreconditionViolation("no-production restrictions do not hold: " + why);
        }
        v.override_used = true;
    }
    if (alg.domains.globals && alg.domains.particles) {
        try {
            v.bound = bound_M(alg.domains.globals->size(), alg.domains.particles->size(),
                              instance.particles.size());
        } catch (const BoundOverflow&) {
        }
    }
    if (opts.cap)
        v.cap = *opts.cap;
    else if (v.bound)
        v.cap = v.bound->M;
    else if (alg.domains.globals && alg.domains.particles)
        v.cap = std::numeric_limits<std::uint64_t>::max();
    else
        throw PreconditionViolation("no state bound available; a cap is required");

    std::unordered_map<std::string, std::size_t> first_visit;
    pm::State<G, P> s = instance;
    for (std::size_t t = 0;; ++t) {
        if (alg.stop(s.global)) {
            v.kind = HaltingVerdict::Kind::Halts;
            v.t = t;
            break;
        }
        std::string key = pm::render_state(alg, s);
        if (auto it = first_visit.find(key); it != first_visit.end()) {
            v.kind = HaltingVerdict::Kind::Loops;
            v.mu = it->second;
            v.lambda = t - it->second;
            break;
        }
        if (first_visit.size() >= v.cap) {
            v.kind = HaltingVerdict::Kind::Exhausted;
            break;
        }
        first_visit.emplace(std::move(key), t);
        pm::State<G, P> next = pm::transition_step(alg, s);
        if (!v.override_used) detail::require_non_increasing(s.particles.size(), next.particles.size(), t);
        s = std::move(next);
    }
    v.visited = first_visit.size();
    return v;
}

}  // namespace ptm::halting
