#include "ptm/errors.hpp"
#include "ptm/fixtures.hpp"
#include "ptm/t2.hpp"
#include "support/machines.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ptm;
using ptm::testing::config;
using ptm::testing::m0;

namespace {

StateId st(const TuringMachine& tm, const char* q) { return *tm.find_state(q); }

t2::Particle tp(const TuringMachine& tm, const char* z, int h, int dh, int o, int dout, int a) {
    return t2::Particle{*tm.find_symbol(z), h, dh, o, dout, a};
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& corpus() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> c = {
        {"m0", {"", "a", "aa", "aaaa", "aaaaaaaa"}},
        {"unary-successor", {"", "1", "11", "111", "11111111"}},
        {"palindrome", {"", "ab", "abba", "abab", "aabbaa", "abbbbbba", "a", "bab"}},
    };
    return c;
}

}  // namespace

TEST(T2Compile, NeighborhoodIsClippedAdjacency) {
    auto tm = m0();
    auto alg = t2::compile(tm);
    auto s = t2::psi(start_config(tm, "aa"));
    using V = std::vector<std::size_t>;
    EXPECT_EQ(alg.neighborhood(s.global, s.particles, 1), V{2});
    EXPECT_EQ(alg.neighborhood(s.global, s.particles, 2), (V{1, 3}));
    EXPECT_EQ(alg.neighborhood(s.global, s.particles, 3), V{2});
    std::vector<t2::Particle> one{s.particles[0]};
    EXPECT_TRUE(alg.neighborhood(s.global, one, 1).empty());
}

TEST(T2Compile, EvolveCases) {
    auto tm = m0();
    auto alg = t2::compile(tm);
    auto s = st(tm, "s");
    auto acc = st(tm, "acc");
    t2::Global g{s, s};

    auto [g1, o1] = alg.evolve(g, tp(tm, "a", -1, 1, -1, 1, 0));
    EXPECT_EQ(g1, g);
    EXPECT_EQ(o1, std::vector<t2::Particle>{tp(tm, "a", 1, 0, 1, -1, 0)});

    auto [g2, o2] = alg.evolve(g, tp(tm, "a", -1, 0, 1, -1, 0));
    EXPECT_EQ(g2, g);
    EXPECT_EQ(o2, std::vector<t2::Particle>{tp(tm, "a", 0, 0, -1, -1, 0)});

    auto [g3, o3] = alg.evolve(g, tp(tm, "a", 1, 0, 1, -1, 1));
    EXPECT_EQ(g3, g);
    EXPECT_EQ(o3, std::vector<t2::Particle>{tp(tm, "a", -1, 0, -1, -1, 0)});

    // Head on the blank with nobody to hand off to: a fresh cell carries the head.
    auto [g4, o4] = alg.evolve(g, tp(tm, "_", 1, 0, 1, -1, 0));
    EXPECT_EQ(g4, (t2::Global{s, acc}));
    EXPECT_EQ(o4, (std::vector<t2::Particle>{tp(tm, "_", -1, 0, -1, -1, 0), tp(tm, "_", 1, 0, 1, -1, 0)}));

    auto plain = tp(tm, "a", 0, 0, 1, -1, 0);
    auto [g5, o5] = alg.evolve(g, plain);
    EXPECT_EQ(g5, g);
    EXPECT_EQ(o5, std::vector<t2::Particle>{plain});

    EXPECT_EQ(alg.evolve_global(t2::Global{s, acc}), (t2::Global{acc, s}));
}

// Property: interact is a pull, the second component is returned unchanged.
TEST(T2Compile, InteractIsPull) {
    auto tm = ptm::fixtures::load("palindrome");
    auto alg = t2::compile(tm);
    for (const auto& g : t2::boundary_globals(tm))
        for (const auto& a : *alg.domains.particles)
            for (const auto& b : *alg.domains.particles) ASSERT_EQ(alg.interact(g, a, b).second, b);
}

TEST(T2Compile, DeclaredDomains) {
    auto tm = m0();
    auto alg = t2::compile(tm);
    EXPECT_EQ(alg.domains.globals->size(), 9u);
    EXPECT_EQ(alg.domains.particles->size(), 3u * 3 * 2 * 2 * 2 * 2);
    EXPECT_EQ(t2::boundary_globals(tm).size(), 3u);
}

TEST(T2Compile, RejectsInvalidMachine) {
    TuringMachine tm({"s", "acc", "rej"}, "s", "acc", "rej", {"a"}, {"a"});
    EXPECT_THROW(t2::compile(tm), InvalidMachine);
}

TEST(T2Psi, Examples) {
    auto tm = m0();
    auto s = st(tm, "s");
    auto p = t2::psi(config(tm, "s", {"|-", "a"}, 1));
    EXPECT_EQ(p.global, (t2::Global{s, s}));
    EXPECT_EQ(p.particles, (std::vector<t2::Particle>{tp(tm, "|-", 1, 0, -1, -1, 0), tp(tm, "a", -1, 0, -1, -1, 0)}));

    auto pal = ptm::fixtures::load("palindrome");
    auto q = t2::psi(config(pal, "s", {"|-", "a", "b"}, 2));
    ASSERT_EQ(q.particles.size(), 3u);
    EXPECT_EQ(q.particles[0].head, 0);
    EXPECT_EQ(q.particles[1].head, 1);
    EXPECT_EQ(q.particles[2].head, -1);
}

TEST(T2Psi, HeadOnLastCellOmitsMarker) {
    auto tm = m0();
    auto p = t2::psi(config(tm, "s", {"|-", "a"}, 2));
    EXPECT_EQ(p.particles[0].head, 0);
    EXPECT_EQ(p.particles[1].head, 1);
    EXPECT_THROW(t2::psi(config(tm, "s", {"|-", "a"}, 3)), UntranslatableConfiguration);
}

TEST(T2PsiInverse, Examples) {
    auto tm = m0();
    auto s = st(tm, "s");
    t2::PmState p{t2::Global{s, s}, {tp(tm, "|-", -1, 0, -1, -1, 0), tp(tm, "a", 1, 0, 1, -1, 0)}};
    EXPECT_EQ(t2::psi_inverse(p), config(tm, "s", {"|-", "a"}, 2));
    auto c = start_config(tm, "a");
    EXPECT_EQ(t2::psi_inverse(t2::psi(c)), c);

    t2::PmState none{t2::Global{s, s}, {tp(tm, "|-", 0, 0, -1, -1, 0), tp(tm, "a", -1, 0, 1, -1, 0)}};
    EXPECT_THROW(t2::psi_inverse(none), EmulationError);
    t2::PmState two{t2::Global{s, s}, {tp(tm, "|-", 1, 0, -1, -1, 0), tp(tm, "a", 1, 0, 1, -1, 0)}};
    EXPECT_THROW(t2::psi_inverse(two), EmulationError);
}

// Property: psi_inverse . psi is the identity wherever psi is defined.
TEST(T2Psi, RoundTrip) {
    auto tm = ptm::fixtures::load("palindrome");
    const auto tape = tm.tape_alphabet();
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        Configuration c{StateId{static_cast<std::uint32_t>(rng() % tm.state_count())}, {kEndMarker}, 1};
        const auto len = rng() % 8;
        for (std::uint64_t k = 0; k < len; ++k) c.tape.push_back(tape[1 + rng() % (tape.size() - 1)]);
        c = canonical(c);
        c.head = 1 + static_cast<std::int64_t>(rng() % c.tape.size());
        ASSERT_EQ(t2::psi_inverse(t2::psi(c)), c);
        ++checked;
    }
    EXPECT_EQ(checked, 2000);
}

TEST(T2Cosim, M0Examples) {
    auto tm = m0();
    auto r = t2::cosim(tm, "a", 100);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.halted);
    EXPECT_EQ(r.tm_trace.size(), 4u);
    EXPECT_EQ(r.pm_trace[1], "g=(s,s) p=[(|-,-1,0,-1,-1,0);(a,1,0,1,-1,0)]");
    // t=3 to t=4 moves the head onto a fresh blank.
    EXPECT_EQ(r.measurements[2].particle_count, 3u);
    EXPECT_EQ(r.measurements[3].particle_count, 4u);

    r = t2::cosim(tm, "", 100);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.halted);
    EXPECT_EQ(r.tm_trace.size(), 3u);
    EXPECT_EQ(r.measurements[0].particle_count, 1u);
    EXPECT_EQ(r.measurements[1].particle_count, 2u);
}

// Property: on every corpus machine and input the PM trace reads back the machine trace.
TEST(T2Cosim, Corpus) {
    for (const auto& [name, inputs] : corpus()) {
        auto tm = ptm::fixtures::load(name);
        auto alg = t2::compile(tm);
        for (const auto& in : inputs) {
            auto r = t2::cosim(tm, alg, in, 10'000);
            EXPECT_TRUE(r.ok()) << name << " '" << in << "' " << (r.divergence ? r.divergence->criterion : "");
            EXPECT_TRUE(r.halted) << name << " '" << in << "'";
            auto ref = tm_run(tm, in, 10'000);
            EXPECT_EQ(r.tm_trace, ref.trace) << name << " '" << in << "'";
            auto s = t2::psi(start_config(tm, in));
            for (std::size_t t = 0; t < ref.trace.size(); ++t) {
                ASSERT_EQ(t2::psi_inverse(s), ref.trace[t]) << name << " '" << in << "' t=" << t + 1;
                if (t + 1 < ref.trace.size()) s = pm::transition_step(alg, s);
            }
        }
    }
}

TEST(T2Cosim, LeftMovesOnBounceMachine) {
    auto tm = ptm::testing::bounce();
    for (const char* in : {"", "a", "aa", "aaa", "aaaaa"}) {
        auto r = t2::cosim(tm, in, 1000);
        EXPECT_TRUE(r.ok()) << in << " " << (r.divergence ? r.divergence->criterion + " t=" + std::to_string(r.divergence->t) : "");
        EXPECT_TRUE(r.halted) << in;
        EXPECT_EQ(tm_run(tm, in, 1000).verdict, RunVerdict::Accepted) << in;
    }
}

TEST(T2Cosim, CorruptedGlobalEvolveIsCaught) {
    auto corrupt = [](t2::PmAlgorithm alg) {
        alg.evolve_global = [](const t2::Global& g) { return t2::Global{g.dq, g.dq}; };
        return alg;
    };
    auto pal = ptm::fixtures::load("palindrome");
    auto r = t2::cosim(pal, corrupt(t2::compile(pal)), "ab", 100);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.divergence->t, 2u);
    EXPECT_EQ(r.divergence->criterion, "dq-not-start");

    auto tm = m0();
    r = t2::cosim(tm, corrupt(t2::compile(tm)), "a", 100);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.divergence->t, 4u);
    EXPECT_EQ(r.divergence->criterion, "dq-not-start");
}

TEST(T2Cosim, OtherCriteria) {
    auto tm = m0();
    auto c = start_config(tm, "aa");
    auto s = t2::psi(c);
    EXPECT_FALSE(t2::check_boundary(tm, s, c));

    auto bad = s;
    bad.particles[1].head = 1;
    EXPECT_EQ(t2::check_boundary(tm, bad, c)->first, "head-marker");
    bad = s;
    bad.particles[1].head = 0;
    EXPECT_EQ(t2::check_boundary(tm, bad, c)->first, "previous-head-marker");
    bad = s;
    bad.particles[2].head = -1;
    EXPECT_EQ(t2::check_boundary(tm, bad, c)->first, "stray-head-marker");
    bad = s;
    bad.particles[2].handoff = 1;
    EXPECT_EQ(t2::check_boundary(tm, bad, c)->first, "pending-flags");
    bad = s;
    bad.particles[0].symbol = *tm.find_symbol("a");
    EXPECT_EQ(t2::check_boundary(tm, bad, c)->first, "psi-inverse-mismatch");
}

// Property: the particle count never shrinks and grows by at most one per step.
TEST(T2Cosim, ParticleCountGrowsByAtMostOne) {
    for (const auto& [name, inputs] : corpus()) {
        auto tm = ptm::fixtures::load(name);
        for (const auto& in : inputs) {
            auto r = t2::cosim(tm, in, 10'000);
            for (std::size_t i = 1; i < r.measurements.size(); ++i) {
                EXPECT_GE(r.measurements[i].particle_count, r.measurements[i - 1].particle_count);
                EXPECT_LE(r.measurements[i].particle_count, r.measurements[i - 1].particle_count + 1);
            }
        }
    }
}
