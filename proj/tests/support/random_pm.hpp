#pragma once

// Seeded random particle methods over small integer domains. Every behavior
// is a lookup table except the neighborhood, which hashes the values it can
// see so that it reacts to interactions made earlier in the same sweep.

#include "ptm/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <vector>

namespace ptm::testing {

struct RandomPmShape {
    int globals = 4;
    int particles = 4;
    std::size_t max_initial = 5;
};

struct RandomTables {
    std::uint64_t seed = 0;
    int ng = 1;
    int np = 1;
    std::vector<bool> stop;
    std::map<std::tuple<int, int, int>, std::pair<int, int>> interact;
    std::map<std::pair<int, int>, std::pair<int, std::vector<int>>> evolve;
    std::vector<int> evolve_global;
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 29);
}

struct RandomPm {
    pm::Algorithm<int, int> alg;
    pm::State<int, int> instance;
};

inline RandomPm random_pm(std::uint64_t seed, const RandomPmShape& shape = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    auto t = std::make_shared<RandomTables>();
    t->seed = seed;
    t->ng = 1 + pick(shape.globals);
    t->np = 1 + pick(shape.particles);
    for (int g = 0; g < t->ng; ++g) t->stop.push_back(pick(10) < 1);
    for (int g = 0; g < t->ng; ++g)
        for (int a = 0; a < t->np; ++a)
            for (int b = 0; b < t->np; ++b) t->interact[{g, a, b}] = {pick(t->np), pick(t->np)};
    for (int g = 0; g < t->ng; ++g)
        for (int a = 0; a < t->np; ++a) {
            int r = pick(20);
            std::size_t len = r < 5 ? 0 : (r < 17 ? 1 : 2);
            std::vector<int> out;
            for (std::size_t n = 0; n < len; ++n) out.push_back(pick(t->np));
            t->evolve[{g, a}] = {pick(t->ng), out};
        }
    for (int g = 0; g < t->ng; ++g) t->evolve_global.push_back(pick(t->ng));

    RandomPm r;
    auto& a = r.alg;
    a.stop = [t](const int& g) { return static_cast<bool>(t->stop[g]); };
    a.interact = [t](const int& g, const int& x, const int& y) { return t->interact.at({g, x, y}); };
    a.evolve = [t](const int& g, const int& x) { return t->evolve.at({g, x}); };
    a.evolve_global = [t](const int& g) { return t->evolve_global[g]; };
    a.neighborhood = [t](const int& g, std::span<const int> p, std::size_t j) {
        std::vector<std::size_t> out;
        for (std::size_t k = 1; k <= p.size(); ++k) {
            if (k == j) continue;
            std::uint64_t h = mix(mix(mix(mix(t->seed, g), j * 131 + k), p[j - 1]), p[k - 1]);
            if (h % 5 < 2) out.push_back(k);
        }
        std::mt19937_64 order(mix(t->seed, p.size() * 7 + j));
        std::shuffle(out.begin(), out.end(), order);
        return out;
    };
    a.domains.render_global = [](const int& g) { return std::to_string(g); };
    a.domains.render_particle = [](const int& x) { return std::to_string(x); };
    std::vector<int> gs, ps;
    for (int g = 0; g < t->ng; ++g) gs.push_back(g);
    for (int x = 0; x < t->np; ++x) ps.push_back(x);
    a.domains.globals = gs;
    a.domains.particles = ps;

    r.instance.global = pick(t->ng);
    std::size_t n = static_cast<std::size_t>(pick(static_cast<int>(shape.max_initial) + 1));
    for (std::size_t k = 0; k < n; ++k) r.instance.particles.push_back(pick(t->np));
    return r;
}

/// Largest step count <= max_steps such that no state up to it has more than
/// max_particles particles. Keeps runs of doubling tables small.
template <class G, class P>
std::size_t bounded_horizon(const pm::Algorithm<G, P>& alg, pm::State<G, P> s, std::size_t max_steps,
                            std::size_t max_particles = 64) {
    for (std::size_t t = 0; t < max_steps; ++t) {
        if (alg.stop(s.global)) return max_steps;
        s = pm::transition_step(alg, s);
        if (s.particles.size() > max_particles) return t;
    }
    return max_steps;
}

}  // namespace ptm::testing
