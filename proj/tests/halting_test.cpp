#include "ptm/fixtures.hpp"
#include "ptm/halting.hpp"
#include "ptm/t1.hpp"
#include "ptm/t2.hpp"
#include "support/machines.hpp"
#include "support/random_pm.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace ptm;
using halting::HaltingVerdict;
using IntAlg = pm::Algorithm<int, int>;
using IntState = pm::State<int, int>;

namespace {

// Counts all (g, p) with |p| <= m by listing them.
std::uint64_t enumerate_states(int size_g, int size_p, int m) {
    std::set<std::pair<int, std::vector<int>>> all;
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= m; ++len) {
        for (int g = 0; g < size_g; ++g)
            for (const auto& p : layer) all.insert({g, p});
        std::vector<std::vector<int>> next;
        for (const auto& p : layer)
            for (int x = 0; x < size_p; ++x) {
                auto q = p;
                q.push_back(x);
                next.push_back(q);
            }
        layer = std::move(next);
    }
    return all.size();
}

IntAlg single(std::vector<int> gs, std::vector<int> ps) {
    IntAlg a;
    a.neighborhood = [](const int&, std::span<const int>, std::size_t) { return std::vector<std::size_t>{}; };
    a.stop = [](const int&) { return false; };
    a.interact = [](const int&, const int& x, const int& y) { return std::pair{x, y}; };
    a.evolve = [](const int& g, const int& p) { return std::pair{g, std::vector<int>{p}}; };
    a.evolve_global = [](const int& g) { return g; };
    a.domains.render_global = [](const int& g) { return std::to_string(g); };
    a.domains.render_particle = [](const int& p) { return std::to_string(p); };
    a.domains.globals = std::move(gs);
    a.domains.particles = std::move(ps);
    return a;
}

struct Brute {
    bool halts = false;
    std::size_t t = 0;
    std::size_t mu = 0;
    std::size_t lambda = 0;
};

// Direct simulation for bound + 1 steps with a linear scan for the first repeat.
Brute brute(const IntAlg& a, const IntState& inst, std::uint64_t bound) {
    std::vector<IntState> seen;
    IntState s = inst;
    for (std::uint64_t t = 0; t <= bound + 1; ++t) {
        if (a.stop(s.global)) return Brute{true, t, 0, 0};
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == s) return Brute{false, 0, i, t - i};
        seen.push_back(s);
        s = pm::transition_step(a, s);
    }
    ADD_FAILURE() << "no stop and no repeat within M + 1 steps";
    return {};
}

void expect_agrees(const IntAlg& a, const IntState& inst, const std::string& label) {
    auto v = halting::decide(a, inst);
    ASSERT_TRUE(v.bound) << label;
    auto b = brute(a, inst, v.bound->M);
    EXPECT_LE(v.visited, v.bound->M) << label;
    if (b.halts) {
        EXPECT_EQ(v.kind, HaltingVerdict::Kind::Halts) << label;
        EXPECT_EQ(v.t, b.t) << label;
    } else {
        ASSERT_EQ(v.kind, HaltingVerdict::Kind::Loops) << label;
        EXPECT_EQ(v.mu, b.mu) << label;
        EXPECT_EQ(v.lambda, b.lambda) << label;
        auto r = pm::run(a, inst, pm::RunOptions{v.mu + v.lambda});
        EXPECT_EQ(pm::render_state(a, r.trace[v.mu]), pm::render_state(a, r.trace[v.mu + v.lambda])) << label;
    }
}

}  // namespace

TEST(BoundM, Examples) {
    EXPECT_EQ(halting::bound_M(5, 1, 4).M, 25u);
    EXPECT_EQ(halting::bound_M(2, 3, 2).M, 26u);
    EXPECT_EQ(halting::bound_M(7, 9, 0).M, 7u);
    EXPECT_EQ(halting::bound_M(1, 1, 0).M, 1u);
    auto b = halting::bound_M(3, 4, 5);
    EXPECT_EQ(b.size_g, 3u);
    EXPECT_EQ(b.size_p, 4u);
    EXPECT_EQ(b.m, 5u);
}

TEST(BoundM, MatchesEnumeration) {
    for (int g = 1; g <= 3; ++g)
        for (int p = 1; p <= 3; ++p)
            for (int m = 0; m <= 4; ++m)
                EXPECT_EQ(halting::bound_M(g, p, m).M, enumerate_states(g, p, m)) << g << " " << p << " " << m;
}

TEST(BoundM, Errors) {
    EXPECT_THROW(halting::bound_M(0, 3, 2), std::invalid_argument);
    EXPECT_THROW(halting::bound_M(3, 0, 2), std::invalid_argument);
    EXPECT_THROW(halting::bound_M(2, 2, 64), BoundOverflow);
    EXPECT_NO_THROW(halting::bound_M(1, 2, 62));
    EXPECT_THROW(halting::bound_M(std::uint64_t{1} << 63, 1, 1), BoundOverflow);
    EXPECT_THROW(halting::bound_M(1, 1, ~std::uint64_t{0}), BoundOverflow);
}

TEST(Decide, Fixtures) {
    auto line = [](const char* name) {
        const auto& f = fixtures::particle_method(name);
        return halting::decide(f.alg, f.instance).line();
    };
    EXPECT_EQ(line("counter3"), "verdict=loops mu=0 lambda=3");
    EXPECT_EQ(line("counter3-stop"), "verdict=halts t=2");
    EXPECT_EQ(line("drain"), "verdict=halts t=3");
    EXPECT_EQ(line("rotate"), "verdict=loops mu=0 lambda=3");

    const auto& c = fixtures::particle_method("counter3");
    auto v = halting::decide(c.alg, c.instance);
    EXPECT_EQ(v.visited, 3u);
    EXPECT_EQ(v.bound->M, 3u);
    EXPECT_FALSE(v.override_used);
}

TEST(Decide, FixturesAgreeWithBruteForce) {
    for (const auto& f : fixtures::particle_methods()) expect_agrees(f.alg, f.instance, f.name);
}

TEST(Decide, HaltsAtZero) {
    auto a = single({0, 1}, {0});
    a.stop = [](const int& g) { return g == 1; };
    auto v = halting::decide(a, IntState{1, {0, 0}});
    EXPECT_EQ(v.kind, HaltingVerdict::Kind::Halts);
    EXPECT_EQ(v.t, 0u);
    EXPECT_EQ(v.visited, 0u);
}

TEST(Decide, PreconditionsAreEnforced) {
    auto a = single({0}, {0});
    a.evolve = [](const int& g, const int& p) { return std::pair{g, std::vector<int>{p, p}}; };
    EXPECT_THROW(halting::decide(a, IntState{0, {0}}), PreconditionViolation);

    auto v = halting::decide(a, IntState{0, {0}}, halting::DecideOptions{std::nullopt, true});
    EXPECT_TRUE(v.override_used);
    EXPECT_EQ(v.kind, HaltingVerdict::Kind::Exhausted);
    EXPECT_EQ(v.cap, 2u);
    EXPECT_EQ(v.visited, 2u);
    EXPECT_EQ(v.line(), "verdict=exhausted visited=2");

    auto tm = ptm::testing::m0();
    auto t2alg = t2::compile(tm);
    EXPECT_THROW(halting::decide(t2alg, t2::psi(start_config(tm, "a"))), PreconditionViolation);
}

TEST(Decide, UnboundedDomainsNeedACap) {
    auto tm = ptm::testing::m0();
    auto alg = t1::compile(tm);
    auto inst = t1::psi(start_config(tm, "a"));
    EXPECT_THROW(halting::decide(alg, inst, halting::DecideOptions{std::nullopt, true}), PreconditionViolation);
    auto v = halting::decide(alg, inst, halting::DecideOptions{100, true});
    EXPECT_EQ(v.line(), "verdict=halts t=3");
    EXPECT_FALSE(v.bound);
}

TEST(Decide, ExplicitCap) {
    const auto& f = fixtures::particle_method("counter3");
    auto v = halting::decide(f.alg, f.instance, halting::DecideOptions{2, false});
    EXPECT_EQ(v.kind, HaltingVerdict::Kind::Exhausted);
    EXPECT_EQ(v.visited, 2u);
}

TEST(Decide, GrowthDuringRunIsReported) {
    // Restriction 3 holds on the declared domain but the instance uses a value outside it.
    auto a = single({0}, {0, 1});
    a.evolve = [](const int& g, const int& p) {
        return std::pair{g, p == 5 ? std::vector<int>{0, 0} : std::vector<int>{p}};
    };
    EXPECT_THROW(halting::decide(a, IntState{0, {5}}), PreconditionViolation);
}

// Property: decide matches brute-force simulation on random non-producing methods.
TEST(DecideProperty, RandomNonProducingMethods) {
    int halts = 0, loops = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto [a, inst] = ptm::testing::random_pm(seed, {4, 3, 4});
        auto full = a.evolve;
        a.evolve = [full](const int& g, const int& p) {
            auto r = full(g, p);
            if (r.second.size() > 1) r.second.resize(1);
            return r;
        };
        expect_agrees(a, inst, "seed " + std::to_string(seed));
        auto v = halting::decide(a, inst);
        (v.kind == HaltingVerdict::Kind::Halts ? halts : loops)++;
    }
    EXPECT_GT(halts, 0);
    EXPECT_GT(loops, 0);
}
