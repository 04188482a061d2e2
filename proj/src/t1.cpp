#include "ptm/t1.hpp"

#include "ptm/errors.hpp"

#include <algorithm>

namespace ptm::t1 {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("index overflow");
    return r;
}

void require_valid(const TuringMachine& tm) {
    auto report = validate(tm);
    if (!report.ok()) throw InvalidMachine("machine does not validate: " + report.violations.front());
}

}  // namespace

PmAlgorithm compile(const TuringMachine& tm_in) {
    require_valid(tm_in);
    auto tm = std::make_shared<const TuringMachine>(tm_in);

    PmAlgorithm alg;
    alg.neighborhood = [](const Global&, std::span<const Particle>, std::size_t) {
        return std::vector<std::size_t>{};
    };
    alg.stop = [tm](const Global& g) { return tm->is_halting(g.q); };
    alg.interact = [](const Global&, const Particle& pj, const Particle& pk) {
        return std::pair{pj, pk};
    };
    alg.evolve = [tm](const Global& g, const Particle& p) -> std::pair<Global, std::vector<Particle>> {
        if (p.index != g.m) return {g, {p}};
        const Action& a = tm->action(g.q, p.symbol);
        Global next = g;
        next.dq = std::max(g.dq, a.next);
        next.d = std::max(g.d, offset(a.move));
        if (add(g.m, offset(a.move)) <= g.count) return {next, {Particle{p.index, a.write}}};
        return {next, {Particle{p.index, a.write}, Particle{add(p.index, 1), kBlank}}};
    };
    alg.evolve_global = [tm](const Global& g) {
        Global next{g.dq, tm->start(), -1, 0, g.count};
        std::int64_t moved = add(g.m, g.d);
        if (moved > g.count) {
            next.m = moved;
            next.count = add(g.count, 1);
        } else {
            next.m = std::max<std::int64_t>(1, moved);
        }
        return next;
    };

    alg.domains.render_global = [tm](const Global& g) {
        return tm->state_name(g.q) + "," + tm->state_name(g.dq) + "," + std::to_string(g.d) + "," +
               std::to_string(g.m) + "," + std::to_string(g.count);
    };
    alg.domains.render_particle = [tm](const Particle& p) {
        return std::to_string(p.index) + "," + tm->symbol_name(p.symbol);
    };
    alg.domains.may_create_particles = true;
    alg.domains.may_destroy_particles = false;
    return alg;
}

PmState psi(const Configuration& c_in) {
    Configuration c = canonical(c_in);
    PmState s;
    s.global = Global{c.state, StateId{0}, -1, c.head, static_cast<std::int64_t>(c.tape.size())};
    for (std::size_t j = 0; j < c.tape.size(); ++j)
        s.particles.push_back(Particle{static_cast<std::int64_t>(j + 1), c.tape[j]});
    return s;
}

Configuration psi_inverse(const PmState& s) {
    if (s.particles.empty()) throw EmulationError("no particles to read the tape from");
    Configuration c{s.global.q, {}, s.global.m};
    for (std::size_t j = 0; j < s.particles.size(); ++j) {
        const auto& p = s.particles[j];
        if (p.index != static_cast<std::int64_t>(j + 1))
            throw EmulationError("index integrity violated: particle " + std::to_string(j + 1) +
                                 " carries cell index " + std::to_string(p.index));
        c.tape.push_back(p.symbol);
    }
    return canonical(std::move(c));
}

std::optional<std::pair<std::string, std::string>> check_boundary(const TuringMachine& tm,
                                                                  const PmState& s,
                                                                  const Configuration& expected) {
    using Failure = std::pair<std::string, std::string>;
    for (std::size_t j = 0; j < s.particles.size(); ++j)
        if (s.particles[j].index != static_cast<std::int64_t>(j + 1))
            return Failure{"index-integrity", "particle " + std::to_string(j + 1) +
                                                  " carries cell index " +
                                                  std::to_string(s.particles[j].index)};
    if (s.particles.empty()) return Failure{"index-integrity", "no particles"};
    Configuration back = psi_inverse(s);
    if (back != canonical(expected))
        return Failure{"psi-inverse-mismatch",
                       "particles read " + render_config_line(tm, 0, back).substr(4) +
                           ", machine is " + render_config_line(tm, 0, expected).substr(4)};
    const auto& g = s.global;
    if (g.count != static_cast<std::int64_t>(s.particles.size()))
        return Failure{"particle-count", "M=" + std::to_string(g.count) + " but |p|=" +
                                             std::to_string(s.particles.size())};
    if (g.m > g.count)
        return Failure{"head-bound", "m=" + std::to_string(g.m) + " > M=" + std::to_string(g.count)};
    if (g.d != -1) return Failure{"direction-reset", "d=" + std::to_string(g.d)};
    if (g.dq != tm.start()) return Failure{"dq-not-start", "dq=" + tm.state_name(g.dq)};
    return std::nullopt;
}

CosimReport cosim(const TuringMachine& tm, const PmAlgorithm& alg, std::string_view input,
                  std::size_t max_steps) {
    Configuration start = start_config(tm, input);
    return cosimulate(tm, alg, psi(start), start, max_steps,
                      [&](const PmState& s, const Configuration& c) { return check_boundary(tm, s, c); });
}

CosimReport cosim(const TuringMachine& tm, std::string_view input, std::size_t max_steps) {
    return cosim(tm, compile(tm), input, max_steps);
}

Global random_global(const TuringMachine& tm, std::int64_t bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> state(0, static_cast<std::uint32_t>(tm.state_count() - 1));
    std::uniform_int_distribution<std::int64_t> index(1, bound);
    std::bernoulli_distribution right(0.5);
    Global g;
    g.q = StateId{state(rng)};
    g.dq = StateId{state(rng)};
    g.d = right(rng) ? 1 : -1;
    g.m = index(rng);
    g.count = index(rng);
    return g;
}

Particle random_particle(const TuringMachine& tm, std::int64_t bound, std::mt19937_64& rng) {
    const auto tape = tm.tape_alphabet();
    std::uniform_int_distribution<std::size_t> symbol(0, tape.size() - 1);
    std::uniform_int_distribution<std::int64_t> index(1, bound);
    Particle p;
    p.index = index(rng);
    p.symbol = tape[symbol(rng)];
    return p;
}

std::vector<Global> bounded_globals(const TuringMachine& tm, std::int64_t bound) {
    std::vector<Global> out;
    for (StateId q : tm.states())
        for (StateId dq : tm.states())
            for (int d : {-1, 1})
                for (std::int64_t m = 1; m <= bound; ++m)
                    for (std::int64_t count = 1; count <= bound; ++count) out.push_back(Global{q, dq, d, m, count});
    return out;
}

std::vector<Particle> bounded_particles(const TuringMachine& tm, std::int64_t bound) {
    std::vector<Particle> out;
    for (std::int64_t k = 1; k <= bound; ++k)
        for (SymbolId z : tm.tape_alphabet()) out.push_back(Particle{k, z});
    return out;
}

}  // namespace ptm::t1
