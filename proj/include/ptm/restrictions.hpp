#pragma once

// Checks of the restriction equations against any particle method whose
// domains can be enumerated or sampled. Every equation is evaluated through
// one function per restriction, so a stored counterexample replays through
// exactly the code that found it.

#include "ptm/engine.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ptm::check {

enum class Restriction {
    EmptyNeighborhood,
    IdentityInteract,
    EvolveOrder,
    EvolvePrevious,
    LogResources,
    FiniteDomains,
    PullInteract,
    InteractPrevious,
    InteractOrder,
    NeighborhoodValue,
    NeighborhoodInteraction,
    ConstantTime,
    ConstantSpace,
    Computable,
    NoProduction,
};

inline std::string_view name(Restriction r) {
    switch (r) {
        case Restriction::EmptyNeighborhood: return "empty-neighborhood";
        case Restriction::IdentityInteract: return "identity-interact";
        case Restriction::EvolveOrder: return "evolve-order-independent";
        case Restriction::EvolvePrevious: return "evolve-previous-independent";
        case Restriction::LogResources: return "log-resources";
        case Restriction::FiniteDomains: return "finite-domains";
        case Restriction::PullInteract: return "pull-interact";
        case Restriction::InteractPrevious: return "interact-previous-independent";
        case Restriction::InteractOrder: return "interact-order-independent";
        case Restriction::NeighborhoodValue: return "neighborhood-value-independent";
        case Restriction::NeighborhoodInteraction: return "neighborhood-interaction-invariant";
        case Restriction::ConstantTime: return "constant-time";
        case Restriction::ConstantSpace: return "constant-space";
        case Restriction::Computable: return "computable";
        case Restriction::NoProduction: return "no-production";
    }
    return "?";
}

enum class Verdict { Pass, Fail, NotCheckable, Measured };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotCheckable: return "not-checkable";
        case Verdict::Measured: return "measured";
    }
    return "?";
}

enum class SamplerMode { Exhaustive, Randomized };

template <class G, class P>
struct DomainSampler {
    SamplerMode mode = SamplerMode::Exhaustive;
    std::string scope = "declared domains";

    // Exhaustive mode. Missing enumerations fall back to the declared domains.
    std::optional<std::vector<G>> globals;
    std::optional<std::vector<P>> particles;

    // Randomized mode. Missing generators draw uniformly from the enumerations.
    std::uint64_t seed = 1;
    std::size_t samples = 10'000;
    std::function<G(std::mt19937_64&)> random_global;
    std::function<P(std::mt19937_64&)> random_particle;

    std::size_t max_state_length = 3;
    std::uint64_t tuple_cap = 10'000'000;

    std::optional<pm::State<G, P>> probe;
    std::size_t probe_steps = 100;
};

template <class G, class P>
DomainSampler<G, P> exhaustive(std::vector<G> globals, std::vector<P> particles, std::string scope) {
    DomainSampler<G, P> s;
    s.mode = SamplerMode::Exhaustive;
    s.scope = std::move(scope);
    s.globals = std::move(globals);
    s.particles = std::move(particles);
    return s;
}

template <class G, class P>
DomainSampler<G, P> randomized(std::uint64_t seed, std::size_t samples,
                               std::function<G(std::mt19937_64&)> random_global,
                               std::function<P(std::mt19937_64&)> random_particle, std::string scope) {
    DomainSampler<G, P> s;
    s.mode = SamplerMode::Randomized;
    s.scope = std::move(scope);
    s.seed = seed;
    s.samples = samples;
    s.random_global = std::move(random_global);
    s.random_particle = std::move(random_particle);
    return s;
}

template <class G, class P>
struct Counterexample {
    std::vector<pm::State<G, P>> states;
    std::vector<G> globals;
    std::vector<P> particles;
    std::vector<std::size_t> indices;
    std::string rendered;
};

template <class G, class P>
struct RestrictionResult {
    int number = 0;
    Restriction restriction = Restriction::FiniteDomains;
    Verdict verdict = Verdict::Pass;
    std::optional<Counterexample<G, P>> counterexample;
    std::string note;
    std::uint64_t evaluated = 0;
};

struct ResourceCurve {
    std::vector<pm::StepRecord> rows;
    bool halted = false;

    std::string render() const {
        std::string out;
        for (const auto& r : rows) {
            out += "t=" + std::to_string(r.t) + " particles=" + std::to_string(r.particle_count) +
                   " g_bits=" + std::to_string(r.global_bits) +
                   " p_bits_max=" + std::to_string(r.max_particle_bits) +
                   " f=" + std::to_string(r.calls.stop) + " e=" + std::to_string(r.calls.evolve) +
                   " eg=" + std::to_string(r.calls.evolve_global) +
                   " i=" + std::to_string(r.calls.interact) +
                   " u=" + std::to_string(r.calls.neighborhood) + "\n";
        }
        return out;
    }
};

template <class G, class P>
ResourceCurve measure_resources(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& instance,
                                std::size_t max_steps) {
    pm::RunOptions opts;
    opts.max_steps = max_steps;
    opts.record_trace = false;
    auto r = pm::run(alg, instance, opts);
    return ResourceCurve{std::move(r.counters.steps), r.status == pm::RunStatus::Halted};
}

template <class G, class P>
struct RestrictionReport {
    std::string family;
    std::string scope;
    std::vector<RestrictionResult<G, P>> results;
    std::optional<ResourceCurve> resources;

    bool passed() const {
        for (const auto& r : results)
            if (r.verdict != Verdict::Pass && r.verdict != Verdict::Measured) return false;
        return true;
    }

    std::uint64_t total_evaluated() const {
        std::uint64_t n = 0;
        for (const auto& r : results) n += r.evaluated;
        return n;
    }

    const RestrictionResult<G, P>* find(int number) const {
        for (const auto& r : results)
            if (r.number == number) return &r;
        return nullptr;
    }

    std::string render() const {
        auto pad = [](std::string s, std::size_t w, bool right = false) {
            if (s.size() >= w) return s;
            return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
        };
        std::string out = "restrictions: " + family + "\nscope: " + scope + "\n";
        out += pad("#", 3, true) + "  " + pad("restriction", 36) + pad("verdict", 15) +
               pad("evaluated", 11, true) + "  note\n";
        for (const auto& r : results) {
            out += pad(std::to_string(r.number), 3, true) + "  " +
                   pad(std::string(name(r.restriction)), 36) +
                   pad(std::string(to_string(r.verdict)), 15) +
                   pad(std::to_string(r.evaluated), 11, true) + "  " + r.note + "\n";
            if (r.counterexample) out += "     counterexample: " + r.counterexample->rendered + "\n";
        }
        out += "evaluated: " + std::to_string(total_evaluated()) + "\n";
        if (resources) {
            out += "resources:\n" + resources->render();
        }
        out += std::string("result: ") + (passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

namespace detail {

template <class G, class P>
std::string show_global(const pm::Algorithm<G, P>& alg, const G& g) {
    return "(" + alg.domains.render_global(g) + ")";
}

template <class G, class P>
std::string show_particle(const pm::Algorithm<G, P>& alg, const P& p) {
    return "(" + alg.domains.render_particle(p) + ")";
}

template <class G, class P>
std::string show_particles(const pm::Algorithm<G, P>& alg, const std::vector<P>& ps) {
    std::string out = "[";
    for (std::size_t j = 0; j < ps.size(); ++j) out += (j ? ";" : "") + show_particle(alg, ps[j]);
    return out + "]";
}

inline std::string show(const std::vector<std::size_t>& ks) {
    std::string out = "(";
    for (std::size_t j = 0; j < ks.size(); ++j) out += (j ? "," : "") + std::to_string(ks[j]);
    return out + ")";
}

inline std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

inline std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

inline std::uint64_t pow_sat(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = mul_sat(r, b);
    return r;
}

}  // namespace detail

// Equations. Each returns nullopt when the equation holds and a description
// of the two unequal sides otherwise.
namespace eq {

template <class G, class P>
std::optional<std::string> empty_neighborhood(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& s,
                                              std::size_t j) {
    auto ks = alg.neighborhood(s.global, std::span<const P>(s.particles), j);
    if (ks.empty()) return std::nullopt;
    return "u(s," + std::to_string(j) + ")=" + detail::show(ks) + " != ()";
}

template <class G, class P>
std::optional<std::string> identity_interact(const pm::Algorithm<G, P>& alg, const G& g, const P& pj,
                                             const P& pk) {
    auto [a, b] = alg.interact(g, pj, pk);
    if (a == pj && b == pk) return std::nullopt;
    return "i=(" + detail::show_particle(alg, a) + "," + detail::show_particle(alg, b) + ") != (" + detail::show_particle(alg, pj) +
           "," + detail::show_particle(alg, pk) + ")";
}

template <class G, class P>
std::optional<std::string> evolve_order(const pm::Algorithm<G, P>& alg, const G& g, const P& p1,
                                        const P& p2) {
    G lhs = alg.evolve(alg.evolve(g, p1).first, p2).first;
    G rhs = alg.evolve(alg.evolve(g, p2).first, p1).first;
    if (lhs == rhs) return std::nullopt;
    return "1e(1e(g,p'),p'')=" + detail::show_global(alg, lhs) + " != 1e(1e(g,p''),p')=" + detail::show_global(alg, rhs);
}

template <class G, class P>
std::optional<std::string> evolve_previous(const pm::Algorithm<G, P>& alg, const G& g, const P& p1,
                                           const P& p2) {
    auto lhs = alg.evolve(g, p1).second;
    auto rhs = alg.evolve(alg.evolve(g, p2).first, p1).second;
    if (lhs == rhs) return std::nullopt;
    return "2e(g,p')=" + detail::show_particles(alg, lhs) + " != 2e(1e(g,p''),p')=" + detail::show_particles(alg, rhs);
}

template <class G, class P>
std::optional<std::string> pull(const pm::Algorithm<G, P>& alg, const G& g, const P& pj, const P& pk) {
    auto b = alg.interact(g, pj, pk).second;
    if (b == pk) return std::nullopt;
    return "2i(g,p_j,p_k)=" + detail::show_particle(alg, b) + " != p_k=" + detail::show_particle(alg, pk);
}

template <class G, class P>
std::optional<std::string> interact_previous(const pm::Algorithm<G, P>& alg, const G& g, const P& pj,
                                             const P& pk, const P& pk2) {
    P changed = alg.interact(g, pk, pk2).first;
    P lhs = alg.interact(g, pj, changed).first;
    P rhs = alg.interact(g, pj, pk).first;
    if (lhs == rhs) return std::nullopt;
    return "1i(p_j,1i(p_k,p_k'))=" + detail::show_particle(alg, lhs) + " != 1i(p_j,p_k)=" + detail::show_particle(alg, rhs);
}

template <class G, class P>
std::optional<std::string> interact_order(const pm::Algorithm<G, P>& alg, const G& g, const P& pj,
                                          const P& pk, const P& pk2) {
    P lhs = alg.interact(g, alg.interact(g, pj, pk).first, pk2).first;
    P rhs = alg.interact(g, alg.interact(g, pj, pk2).first, pk).first;
    if (lhs == rhs) return std::nullopt;
    return "1i(1i(p_j,p_k),p_k')=" + detail::show_particle(alg, lhs) + " != 1i(1i(p_j,p_k'),p_k)=" +
           detail::show_particle(alg, rhs);
}

// u as a selection of 1..L in increasing order, the shape of the
// (k in 1..|p| : Omega(j,k)) form.
template <class G, class P>
std::optional<std::string> neighborhood_form(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& s,
                                             std::size_t j) {
    auto ks = alg.neighborhood(s.global, std::span<const P>(s.particles), j);
    for (std::size_t n = 0; n < ks.size(); ++n) {
        if (ks[n] < 1 || ks[n] > s.particles.size() || (n > 0 && ks[n] <= ks[n - 1]))
            return "u(s," + std::to_string(j) + ")=" + detail::show(ks) +
                   " is not an increasing selection of 1.." + std::to_string(s.particles.size());
    }
    return std::nullopt;
}

template <class G, class P>
std::optional<std::string> neighborhood_value(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& ref,
                                              const pm::State<G, P>& s, std::size_t j) {
    if (auto bad = neighborhood_form(alg, s, j)) return bad;
    auto a = alg.neighborhood(ref.global, std::span<const P>(ref.particles), j);
    auto b = alg.neighborhood(s.global, std::span<const P>(s.particles), j);
    if (a == b) return std::nullopt;
    return "u(s1," + std::to_string(j) + ")=" + detail::show(a) + " != u(s2," + std::to_string(j) +
           ")=" + detail::show(b) + " at length " + std::to_string(s.particles.size());
}

template <class G, class P>
std::optional<std::string> neighborhood_interaction(const pm::Algorithm<G, P>& alg, const pm::State<G, P>& s,
                                                    std::size_t j, std::size_t k1, std::size_t k2) {
    pm::State<G, P> after{s.global, pm::interact_pair(alg, s, k1, k2)};
    auto a = alg.neighborhood(s.global, std::span<const P>(s.particles), j);
    auto b = alg.neighborhood(after.global, std::span<const P>(after.particles), j);
    if (a == b) return std::nullopt;
    return "u(s," + std::to_string(j) + ")=" + detail::show(a) + " != " + detail::show(b) +
           " after interacting " + std::to_string(k1) + " with " + std::to_string(k2);
}

template <class G, class P>
std::optional<std::string> no_production(const pm::Algorithm<G, P>& alg, const G& g, const P& p) {
    auto out = alg.evolve(g, p).second;
    if (out.size() <= 1) return std::nullopt;
    return "|2e(g,p)|=" + std::to_string(out.size()) + " > 1: " + detail::show_particles(alg, out);
}

template <class G, class P>
std::optional<std::string> finite_domains(const pm::Algorithm<G, P>& alg) {
    const auto& d = alg.domains;
    if (d.globals && d.particles) return std::nullopt;
    std::string missing = !d.globals && !d.particles ? "G and P" : (!d.globals ? "G" : "P");
    return missing + " not declared finite";
}

template <class G, class P>
std::optional<std::string> computable(const pm::Algorithm<G, P>& alg) {
    if (alg.domains.computable) return std::nullopt;
    return std::string("behaviors not declared computable");
}

}  // namespace eq

/// Re-evaluates the equation of `r` on a stored counterexample. True when
/// the violation reproduces.
template <class G, class P>
bool replay(const pm::Algorithm<G, P>& alg, Restriction r, const Counterexample<G, P>& cx) {
    auto g = [&]() -> const G& { return cx.globals.at(0); };
    auto p = [&](std::size_t n) -> const P& { return cx.particles.at(n); };
    auto k = [&](std::size_t n) { return cx.indices.at(n); };
    switch (r) {
        case Restriction::EmptyNeighborhood: return eq::empty_neighborhood(alg, cx.states.at(0), k(0)).has_value();
        case Restriction::IdentityInteract: return eq::identity_interact(alg, g(), p(0), p(1)).has_value();
        case Restriction::EvolveOrder: return eq::evolve_order(alg, g(), p(0), p(1)).has_value();
        case Restriction::EvolvePrevious: return eq::evolve_previous(alg, g(), p(0), p(1)).has_value();
        case Restriction::PullInteract: return eq::pull(alg, g(), p(0), p(1)).has_value();
        case Restriction::InteractPrevious: return eq::interact_previous(alg, g(), p(0), p(1), p(2)).has_value();
        case Restriction::InteractOrder: return eq::interact_order(alg, g(), p(0), p(1), p(2)).has_value();
        case Restriction::NeighborhoodValue:
            if (cx.states.size() == 1) return eq::neighborhood_form(alg, cx.states[0], k(0)).has_value();
            return eq::neighborhood_value(alg, cx.states.at(0), cx.states.at(1), k(0)).has_value();
        case Restriction::NeighborhoodInteraction:
            return eq::neighborhood_interaction(alg, cx.states.at(0), k(0), k(1), k(2)).has_value();
        case Restriction::NoProduction: return eq::no_production(alg, g(), p(0)).has_value();
        case Restriction::FiniteDomains: return eq::finite_domains(alg).has_value();
        case Restriction::Computable: return eq::computable(alg).has_value();
        case Restriction::LogResources:
        case Restriction::ConstantTime:
        case Restriction::ConstantSpace: return false;
    }
    return false;
}

namespace detail {

template <class G, class P>
class Runner {
public:
    Runner(const pm::Algorithm<G, P>& alg, const DomainSampler<G, P>& s) : alg_(alg), s_(s) {
        globals_ = s.globals ? s.globals : alg.domains.globals;
        particles_ = s.particles ? s.particles : alg.domains.particles;
    }

    const pm::Algorithm<G, P>& alg() const { return alg_; }

    /// Evaluates `f(g, ps)` over G x P^N. `f` returns a counterexample or nullopt.
    template <std::size_t N, class F>
    RestrictionResult<G, P> tuples(int number, Restriction r, F&& f) {
        RestrictionResult<G, P> res{number, r, Verdict::Pass, std::nullopt, "", 0};
        if (s_.mode == SamplerMode::Exhaustive) {
            if (!globals_ || !particles_) return not_checkable(res, "domains not enumerable");
            const std::uint64_t total = mul_sat(globals_->size(), pow_sat(particles_->size(), N));
            if (total > s_.tuple_cap)
                return not_checkable(res, std::to_string(total) + " tuples exceed the cap of " +
                                              std::to_string(s_.tuple_cap));
            const auto& ps = *particles_;
            for (const G& g : *globals_) {
                if (N > 0 && ps.empty()) break;
                std::array<std::size_t, N> idx{};
                while (true) {
                    std::array<const P*, N> args;
                    for (std::size_t n = 0; n < N; ++n) args[n] = &ps[idx[n]];
                    ++res.evaluated;
                    if (auto cx = f(g, args)) return fail(res, std::move(*cx));
                    std::size_t n = N;
                    while (n > 0 && ++idx[n - 1] == ps.size()) idx[--n] = 0;
                    if (n == 0) break;
                }
            }
            res.note = "exhaustive";
            return res;
        }
        if (!can_sample()) return not_checkable(res, "domains neither enumerable nor sampleable");
        auto rng = make_rng(number);
        for (std::size_t i = 0; i < s_.samples; ++i) {
            G g = draw_global(rng);
            std::array<P, N> vals;
            for (auto& v : vals) v = draw_particle(rng);
            std::array<const P*, N> args;
            for (std::size_t n = 0; n < N; ++n) args[n] = &vals[n];
            ++res.evaluated;
            if (auto cx = f(g, args)) return fail(res, std::move(*cx));
        }
        res.note = "seed " + std::to_string(s_.seed);
        return res;
    }

    /// Evaluates `f(state, evaluated)` over states of bounded length.
    /// `work(L)` is the number of equation evaluations per state of length L.
    template <class W, class F>
    RestrictionResult<G, P> states(int number, Restriction r, W&& work, F&& f) {
        RestrictionResult<G, P> res{number, r, Verdict::Pass, std::nullopt, "", 0};
        if (s_.mode == SamplerMode::Exhaustive) {
            if (!globals_ || !particles_) return not_checkable(res, "domains not enumerable");
            std::uint64_t budget = 0;
            std::optional<std::size_t> max_len;
            for (std::size_t L = 0; L <= s_.max_state_length; ++L) {
                std::uint64_t n = mul_sat(mul_sat(globals_->size(), pow_sat(particles_->size(), L)), work(L));
                if (add_sat(budget, n) > s_.tuple_cap) break;
                budget = add_sat(budget, n);
                max_len = L;
            }
            if (!max_len) return not_checkable(res, "no state length fits the cap");
            const auto& ps = *particles_;
            for (std::size_t L = 0; L <= *max_len; ++L) {
                if (L > 0 && ps.empty()) break;
                for (const G& g : *globals_) {
                    std::vector<std::size_t> idx(L, 0);
                    pm::State<G, P> s{g, std::vector<P>(L, L ? ps[0] : P{})};
                    while (true) {
                        for (std::size_t n = 0; n < L; ++n) s.particles[n] = ps[idx[n]];
                        if (auto cx = f(s, res.evaluated)) return fail(res, std::move(*cx));
                        std::size_t n = L;
                        while (n > 0 && ++idx[n - 1] == ps.size()) idx[--n] = 0;
                        if (n == 0) break;
                    }
                }
            }
            res.note = "exhaustive, lengths 0.." + std::to_string(*max_len);
            return res;
        }
        if (!can_sample()) return not_checkable(res, "domains neither enumerable nor sampleable");
        auto rng = make_rng(number);
        std::uniform_int_distribution<std::size_t> length(s_.max_state_length ? 1 : 0, s_.max_state_length);
        for (std::size_t i = 0; i < s_.samples; ++i) {
            pm::State<G, P> s{draw_global(rng), {}};
            const std::size_t L = length(rng);
            for (std::size_t n = 0; n < L; ++n) s.particles.push_back(draw_particle(rng));
            if (auto cx = f(s, res.evaluated)) return fail(res, std::move(*cx));
        }
        res.note = "seed " + std::to_string(s_.seed) + ", lengths 1.." + std::to_string(s_.max_state_length);
        return res;
    }

    RestrictionResult<G, P> declaration(int number, Restriction r, std::optional<std::string> failure,
                                        std::string note) {
        RestrictionResult<G, P> res{number, r, Verdict::Pass, std::nullopt, std::move(note), 0};
        if (failure) {
            Counterexample<G, P> cx;
            cx.rendered = *failure;
            auto failed = fail(res, std::move(cx));
            failed.note = res.note;
            return failed;
        }
        return res;
    }

    RestrictionResult<G, P> measured(int number, Restriction r, std::string note) const {
        if (!s_.probe) note += "; no probe instance supplied";
        return RestrictionResult<G, P>{number, r, Verdict::Measured, std::nullopt, std::move(note), 0};
    }

    std::optional<ResourceCurve> resources() const {
        if (!s_.probe) return std::nullopt;
        return measure_resources(alg_, *s_.probe, s_.probe_steps);
    }

private:
    static RestrictionResult<G, P> not_checkable(RestrictionResult<G, P> res, std::string why) {
        res.verdict = Verdict::NotCheckable;
        res.note = std::move(why);
        return res;
    }

    static RestrictionResult<G, P> fail(RestrictionResult<G, P> res, Counterexample<G, P> cx) {
        res.verdict = Verdict::Fail;
        res.note = "first violation after " + std::to_string(res.evaluated) + " evaluations";
        res.counterexample = std::move(cx);
        return res;
    }

    bool can_sample() const {
        return (s_.random_global || (globals_ && !globals_->empty())) &&
               (s_.random_particle || (particles_ && !particles_->empty()));
    }

    std::mt19937_64 make_rng(int number) const {
        std::seed_seq seq{static_cast<std::uint32_t>(s_.seed), static_cast<std::uint32_t>(s_.seed >> 32),
                          static_cast<std::uint32_t>(number)};
        return std::mt19937_64(seq);
    }

    G draw_global(std::mt19937_64& rng) const {
        if (s_.random_global) return s_.random_global(rng);
        std::uniform_int_distribution<std::size_t> pick(0, globals_->size() - 1);
        return (*globals_)[pick(rng)];
    }

    P draw_particle(std::mt19937_64& rng) const {
        if (s_.random_particle) return s_.random_particle(rng);
        std::uniform_int_distribution<std::size_t> pick(0, particles_->size() - 1);
        return (*particles_)[pick(rng)];
    }

    const pm::Algorithm<G, P>& alg_;
    const DomainSampler<G, P>& s_;
    std::optional<std::vector<G>> globals_;
    std::optional<std::vector<P>> particles_;
};

template <class G, class P>
Counterexample<G, P> tuple_cx(const pm::Algorithm<G, P>& alg, const G& g, std::vector<P> ps,
                              const std::string& why) {
    Counterexample<G, P> cx;
    cx.globals = {g};
    cx.rendered = "g=" + show_global(alg, g);
    for (std::size_t n = 0; n < ps.size(); ++n) cx.rendered += " p" + std::to_string(n + 1) + "=" + show_particle(alg, ps[n]);
    cx.rendered += ": " + why;
    cx.particles = std::move(ps);
    return cx;
}

template <class G, class P>
Counterexample<G, P> state_cx(const pm::Algorithm<G, P>& alg, std::vector<pm::State<G, P>> states,
                              std::vector<std::size_t> indices, const std::string& why) {
    Counterexample<G, P> cx;
    for (std::size_t n = 0; n < states.size(); ++n)
        cx.rendered += (n ? " " : "") + std::string("s") + std::to_string(n + 1) + "={" +
                       pm::render_state(alg, states[n]) + "}";
    cx.rendered += " indices=" + show(indices) + ": " + why;
    cx.states = std::move(states);
    cx.indices = std::move(indices);
    return cx;
}

template <std::size_t N, class G, class P, class E>
auto tuple_check(const pm::Algorithm<G, P>& alg, E&& equation) {
    return [&alg, equation](const G& g, const std::array<const P*, N>& ps) -> std::optional<Counterexample<G, P>> {
        std::optional<std::string> bad;
        if constexpr (N == 1) bad = equation(alg, g, *ps[0]);
        if constexpr (N == 2) bad = equation(alg, g, *ps[0], *ps[1]);
        if constexpr (N == 3) bad = equation(alg, g, *ps[0], *ps[1], *ps[2]);
        if (!bad) return std::nullopt;
        std::vector<P> vals;
        for (const P* p : ps) vals.push_back(*p);
        return tuple_cx(alg, g, std::move(vals), *bad);
    };
}

template <class G, class P>
RestrictionResult<G, P> empty_neighborhood(Runner<G, P>& run, int number) {
    const auto& alg = run.alg();
    return run.states(
        number, Restriction::EmptyNeighborhood, [](std::size_t L) { return std::uint64_t{L}; },
        [&](const pm::State<G, P>& s, std::uint64_t& evaluated) -> std::optional<Counterexample<G, P>> {
            for (std::size_t j = 1; j <= s.particles.size(); ++j) {
                ++evaluated;
                if (auto bad = eq::empty_neighborhood(alg, s, j)) return state_cx(alg, {s}, {j}, *bad);
            }
            return std::nullopt;
        });
}

template <class G, class P>
RestrictionResult<G, P> neighborhood_value(Runner<G, P>& run, int number) {
    const auto& alg = run.alg();
    std::vector<std::optional<pm::State<G, P>>> reference;
    return run.states(
        number, Restriction::NeighborhoodValue, [](std::size_t L) { return std::uint64_t{L}; },
        [&](const pm::State<G, P>& s, std::uint64_t& evaluated) -> std::optional<Counterexample<G, P>> {
            const std::size_t L = s.particles.size();
            if (reference.size() <= L) reference.resize(L + 1);
            if (!reference[L]) {
                reference[L] = s;
                for (std::size_t j = 1; j <= L; ++j) {
                    ++evaluated;
                    if (auto bad = eq::neighborhood_form(alg, s, j)) return state_cx(alg, {s}, {j}, *bad);
                }
                return std::nullopt;
            }
            for (std::size_t j = 1; j <= L; ++j) {
                ++evaluated;
                if (auto bad = eq::neighborhood_value(alg, *reference[L], s, j))
                    return state_cx(alg, {*reference[L], s}, {j}, *bad);
            }
            return std::nullopt;
        });
}

template <class G, class P>
RestrictionResult<G, P> neighborhood_interaction(Runner<G, P>& run, int number) {
    const auto& alg = run.alg();
    return run.states(
        number, Restriction::NeighborhoodInteraction,
        [](std::size_t L) { return std::uint64_t{L} * L * (L ? L - 1 : 0); },
        [&](const pm::State<G, P>& s, std::uint64_t& evaluated) -> std::optional<Counterexample<G, P>> {
            const std::size_t L = s.particles.size();
            for (std::size_t j = 1; j <= L; ++j)
                for (std::size_t k1 = 1; k1 <= L; ++k1)
                    for (std::size_t k2 = 1; k2 <= L; ++k2) {
                        if (k1 == k2) continue;
                        ++evaluated;
                        if (auto bad = eq::neighborhood_interaction(alg, s, j, k1, k2))
                            return state_cx(alg, {s}, {j, k1, k2}, *bad);
                    }
            return std::nullopt;
        });
}

}  // namespace detail

template <class G, class P>
RestrictionReport<G, P> check_t1(const pm::Algorithm<G, P>& alg, const DomainSampler<G, P>& sampler) {
    detail::Runner<G, P> run(alg, sampler);
    RestrictionReport<G, P> rep{"t1", sampler.scope, {}, std::nullopt};
    rep.results.push_back(detail::empty_neighborhood(run, 1));
    rep.results.push_back(run.template tuples<2>(
        2, Restriction::IdentityInteract,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::identity_interact(a, g, x, y); })));
    rep.results.push_back(run.template tuples<2>(
        3, Restriction::EvolveOrder,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::evolve_order(a, g, x, y); })));
    rep.results.push_back(run.template tuples<2>(
        4, Restriction::EvolvePrevious,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::evolve_previous(a, g, x, y); })));
    rep.results.push_back(
        run.measured(5, Restriction::LogResources, "measured only: g_bits, p_bits_max, f, e, eg per step"));
    rep.resources = run.resources();
    return rep;
}

template <class G, class P>
RestrictionReport<G, P> check_t2(const pm::Algorithm<G, P>& alg, const DomainSampler<G, P>& sampler) {
    detail::Runner<G, P> run(alg, sampler);
    RestrictionReport<G, P> rep{"t2", sampler.scope, {}, std::nullopt};
    rep.results.push_back(run.declaration(1, Restriction::FiniteDomains, eq::finite_domains(alg), "declaration"));
    rep.results.push_back(run.template tuples<2>(
        2, Restriction::PullInteract,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::pull(a, g, x, y); })));
    rep.results.push_back(run.template tuples<3>(
        3, Restriction::InteractPrevious,
        detail::tuple_check<3>(alg, [](auto& a, auto& g, auto& x, auto& y, auto& z) {
            return eq::interact_previous(a, g, x, y, z);
        })));
    rep.results.push_back(run.template tuples<3>(
        4, Restriction::InteractOrder,
        detail::tuple_check<3>(alg, [](auto& a, auto& g, auto& x, auto& y, auto& z) {
            return eq::interact_order(a, g, x, y, z);
        })));
    rep.results.push_back(run.template tuples<2>(
        5, Restriction::EvolveOrder,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::evolve_order(a, g, x, y); })));
    rep.results.push_back(run.template tuples<2>(
        6, Restriction::EvolvePrevious,
        detail::tuple_check<2>(alg, [](auto& a, auto& g, auto& x, auto& y) { return eq::evolve_previous(a, g, x, y); })));
    rep.results.push_back(detail::neighborhood_value(run, 7));
    rep.results.push_back(detail::neighborhood_interaction(run, 8));
    rep.results.push_back(run.measured(9, Restriction::ConstantTime,
                                       "measured only: e, i, f, eg calls per step; u measured but exempt"));
    rep.results.push_back(run.measured(10, Restriction::ConstantSpace, "measured only: g_bits, p_bits_max per step"));
    rep.resources = run.resources();
    return rep;
}

template <class G, class P>
RestrictionReport<G, P> check_t3(const pm::Algorithm<G, P>& alg, const DomainSampler<G, P>& sampler) {
    detail::Runner<G, P> run(alg, sampler);
    RestrictionReport<G, P> rep{"t3", sampler.scope, {}, std::nullopt};
    rep.results.push_back(run.declaration(1, Restriction::FiniteDomains, eq::finite_domains(alg), "declaration"));
    rep.results.push_back(run.declaration(2, Restriction::Computable, eq::computable(alg), "declaration, not testable"));
    rep.results.push_back(run.template tuples<1>(
        3, Restriction::NoProduction,
        detail::tuple_check<1>(alg, [](auto& a, auto& g, auto& x) { return eq::no_production(a, g, x); })));
    rep.resources = run.resources();
    return rep;
}

}  // namespace ptm::check
