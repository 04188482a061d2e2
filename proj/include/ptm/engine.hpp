#pragma once

// Particle method state transition semantics.
//
// A particle method is a bundle of five behaviors over a global value G and
// particle values P. One state transition step runs an interaction sweep
// (every particle j pulls/pushes with each index returned by the
// neighborhood of the current state), then an evolution sweep that threads
// the global value through every particle and concatenates the emitted
// particles, then the global evolve. The sweeps are written as folds with the
// composition operator `compose`, one function per sub-step.
//
// Particle indices handed to and returned from the neighborhood behavior are
// 1-based, as are the indices of interact_pair.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptm::pm {

template <class G, class P>
struct State {
    G global;
    std::vector<P> particles;
    bool operator==(const State&) const = default;
};

struct InvocationCounts {
    std::uint64_t neighborhood = 0;
    std::uint64_t stop = 0;
    std::uint64_t interact = 0;
    std::uint64_t evolve = 0;
    std::uint64_t evolve_global = 0;

    InvocationCounts& operator+=(const InvocationCounts& o) {
        neighborhood += o.neighborhood;
        stop += o.stop;
        interact += o.interact;
        evolve += o.evolve;
        evolve_global += o.evolve_global;
        return *this;
    }
    bool operator==(const InvocationCounts&) const = default;
};

/// Measurements for the state at time `t` and the calls made while
/// processing it (stop check plus, if it was not final, one step).
struct StepRecord {
    std::size_t t = 0;
    std::size_t particle_count = 0;
    std::size_t global_bits = 0;
    std::size_t max_particle_bits = 0;
    InvocationCounts calls;
};

struct StepCounters {
    InvocationCounts totals;
    std::vector<StepRecord> steps;
};

/// Domain metadata. Renderers produce the comma-separated fields of one
/// value without parentheses. Enumerations are present only for finite
/// domains and double as the declaration that the domain is finite.
template <class G, class P>
struct Domains {
    std::function<std::string(const G&)> render_global;
    std::function<std::string(const P&)> render_particle;
    std::optional<std::vector<G>> globals;
    std::optional<std::vector<P>> particles;
    bool may_create_particles = true;
    bool may_destroy_particles = true;
    /// Behaviors terminate on every argument. Not testable, only declared.
    bool computable = true;
};

template <class G, class P>
struct Algorithm {
    using Global = G;
    using Particle = P;

    std::function<std::vector<std::size_t>(const G&, std::span<const P>, std::size_t)> neighborhood;
    std::function<bool(const G&)> stop;
    std::function<std::pair<P, P>(const G&, const P&, const P&)> interact;
    std::function<std::pair<G, std::vector<P>>(const G&, const P&)> evolve;
    std::function<G(const G&)> evolve_global;
    Domains<G, P> domains;
};

/// a *_h (b1, ..., bn) = h(a, b1) *_h (b2, ..., bn); a *_h () = a.
template <class A, class R, class H>
A compose(A a, R&& bs, H&& h) {
    for (auto&& b : bs) a = h(std::move(a), b);
    return a;
}

inline auto one_to(std::size_t n) { return std::views::iota(std::size_t{1}, n + 1); }

namespace detail {

inline void bump(InvocationCounts* c, std::uint64_t InvocationCounts::*field) {
    if (c) ++(c->*field);
}

template <class G, class P>
std::vector<P> interact_in_place(const Algorithm<G, P>& alg, const G& g, std::vector<P> p,
                                 std::size_t j, std::size_t k, InvocationCounts* calls) {
    if (j < 1 || j > p.size() || k < 1 || k > p.size())
        throw std::out_of_range("interaction index out of range");
    if (j == k) throw std::invalid_argument("particle cannot interact with itself");
    bump(calls, &InvocationCounts::interact);
    auto [pj, pk] = alg.interact(g, p[j - 1], p[k - 1]);
    p[j - 1] = std::move(pj);
    p[k - 1] = std::move(pk);
    return p;
}

// One particle with all of its neighbors. The neighborhood is evaluated on
// the particles as they are when particle j's turn comes.
template <class G, class P>
std::vector<P> interact_one(const Algorithm<G, P>& alg, const G& g, std::vector<P> p,
                            std::size_t j, InvocationCounts* calls) {
    bump(calls, &InvocationCounts::neighborhood);
    const auto neighbors = alg.neighborhood(g, std::span<const P>(p), j);
    for (std::size_t k : neighbors)
        if (k < 1 || k > p.size())
            throw std::out_of_range("neighborhood returned index " + std::to_string(k) +
                                    " outside 1.." + std::to_string(p.size()));
    return compose(std::move(p), neighbors, [&](std::vector<P> acc, std::size_t k) {
        return interact_in_place(alg, g, std::move(acc), j, k, calls);
    });
}

}  // namespace detail

template <class G, class P>
std::vector<P> interact_pair(const Algorithm<G, P>& alg, const State<G, P>& s, std::size_t j,
                             std::size_t k, InvocationCounts* calls = nullptr) {
    return detail::interact_in_place(alg, s.global, s.particles, j, k, calls);
}

template <class G, class P>
std::vector<P> interact_all(const Algorithm<G, P>& alg, const State<G, P>& s,
                            InvocationCounts* calls = nullptr) {
    return compose(s.particles, one_to(s.particles.size()), [&](std::vector<P> acc, std::size_t j) {
        return detail::interact_one(alg, s.global, std::move(acc), j, calls);
    });
}

template <class G, class P>
State<G, P> evolve_all(const Algorithm<G, P>& alg, const State<G, P>& s,
                       InvocationCounts* calls = nullptr) {
    State<G, P> init{s.global, {}};
    return compose(std::move(init), one_to(s.particles.size()), [&](State<G, P> acc, std::size_t j) {
        detail::bump(calls, &InvocationCounts::evolve);
        auto [g, emitted] = alg.evolve(acc.global, s.particles[j - 1]);
        acc.global = std::move(g);
        acc.particles.insert(acc.particles.end(), std::make_move_iterator(emitted.begin()),
                             std::make_move_iterator(emitted.end()));
        return acc;
    });
}

template <class G, class P>
State<G, P> transition_step(const Algorithm<G, P>& alg, const State<G, P>& s,
                            InvocationCounts* calls = nullptr) {
    State<G, P> interacted{s.global, interact_all(alg, s, calls)};
    State<G, P> evolved = evolve_all(alg, interacted, calls);
    detail::bump(calls, &InvocationCounts::evolve_global);
    evolved.global = alg.evolve_global(evolved.global);
    return evolved;
}

template <class G, class P>
std::string render_state(const Domains<G, P>& d, const State<G, P>& s) {
    std::string out = "g=(" + d.render_global(s.global) + ") p=[";
    for (std::size_t j = 0; j < s.particles.size(); ++j) {
        if (j) out += ';';
        out += '(' + d.render_particle(s.particles[j]) + ')';
    }
    out += ']';
    return out;
}

template <class G, class P>
std::string render_state(const Algorithm<G, P>& alg, const State<G, P>& s) {
    return render_state(alg.domains, s);
}

/// Encoded size of a value: 8 bits per character of its canonical rendering.
inline std::size_t encoded_bits(const std::string& rendered) { return 8 * rendered.size(); }

template <class G, class P>
StepRecord measure(const Domains<G, P>& d, const State<G, P>& s, std::size_t t) {
    StepRecord r;
    r.t = t;
    r.particle_count = s.particles.size();
    r.global_bits = encoded_bits("(" + d.render_global(s.global) + ")");
    for (const auto& p : s.particles)
        r.max_particle_bits =
            std::max(r.max_particle_bits, encoded_bits("(" + d.render_particle(p) + ")"));
    return r;
}

enum class RunStatus { Halted, CapExceeded };

struct RunOptions {
    std::size_t max_steps = 10'000;
    bool record_trace = true;
    bool record_counters = true;
};

template <class G, class P>
struct RunResult {
    RunStatus status = RunStatus::CapExceeded;
    State<G, P> final_state;
    std::size_t steps = 0;
    std::vector<State<G, P>> trace;  // trace[0] is the instance
    StepCounters counters;
};

/// Checks the stop condition before every step; an instance that already
/// satisfies it is final with zero steps.
template <class G, class P>
RunResult<G, P> run(const Algorithm<G, P>& alg, const State<G, P>& instance,
                    const RunOptions& opts = {}) {
    RunResult<G, P> r;
    State<G, P> s = instance;
    for (std::size_t t = 0;; ++t) {
        if (opts.record_trace) r.trace.push_back(s);
        StepRecord rec;
        if (opts.record_counters) rec = measure(alg.domains, s, t + 1);
        ++rec.calls.stop;
        bool done = alg.stop(s.global);
        if (!done && t < opts.max_steps) s = transition_step(alg, s, &rec.calls);
        r.counters.totals += rec.calls;
        if (opts.record_counters) r.counters.steps.push_back(rec);
        if (done) {
            r.status = RunStatus::Halted;
            r.steps = t;
            break;
        }
        if (t == opts.max_steps) {
            r.status = RunStatus::CapExceeded;
            r.steps = t;
            break;
        }
    }
    r.final_state = std::move(s);
    return r;
}

}  // namespace ptm::pm
