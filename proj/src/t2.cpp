#include "ptm/t2.hpp"

#include "ptm/errors.hpp"

#include <algorithm>
#include <memory>

namespace ptm::t2 {

namespace {

void require_valid(const TuringMachine& tm) {
    auto report = validate(tm);
    if (!report.ok()) throw InvalidMachine("machine does not validate: " + report.violations.front());
}

// Whether `head_cell` (head = 1) hands the head to `other` under the pending
// move `d`: back onto the previous cell, or onward onto an unmarked one.
bool takes_head(const Particle& other, const Particle& head_cell, int d) {
    return (other.head == -1 && d != head_cell.last_move) ||
           (other.head == 0 && d == head_cell.last_move);
}

}  // namespace

PmAlgorithm compile(const TuringMachine& tm_in) {
    require_valid(tm_in);
    auto tm = std::make_shared<const TuringMachine>(tm_in);

    PmAlgorithm alg;
    alg.neighborhood = [](const Global&, std::span<const Particle> p, std::size_t j) {
        std::vector<std::size_t> out;
        if (j > 1) out.push_back(j - 1);
        if (j + 1 <= p.size()) out.push_back(j + 1);
        return out;
    };
    alg.stop = [tm](const Global& g) { return tm->is_halting(g.q); };
    alg.interact = [tm](const Global& g, const Particle& pj, const Particle& pk) {
        Particle out = pj;
        if (pk.head == 1) {
            int dk = offset(tm->action(g.q, pk.symbol).move);
            if (takes_head(pj, pk, dk)) {
                out.pending_head = 1;
                out.next_move = std::max(pj.next_move, dk);
            }
        } else if (pj.head == 1) {
            int dj = offset(tm->action(g.q, pj.symbol).move);
            if (takes_head(pk, pj, dj)) out.handoff = 1;
        }
        return std::pair{out, pk};
    };
    alg.evolve = [tm](const Global& g, const Particle& p) -> std::pair<Global, std::vector<Particle>> {
        if (p.pending_head == 1) return {g, {Particle{p.symbol, 1, 0, p.next_move, -1, 0}}};
        if (p.head == -1) return {g, {Particle{p.symbol, 0, 0, -1, -1, 0}}};
        if (p.head == 1) {
            const Action& a = tm->action(g.q, p.symbol);
            Global next{g.q, std::max(g.dq, a.next)};
            Particle left_behind{a.write, -1, 0, -1, -1, 0};
            if (p.handoff == 1) return {next, {left_behind}};
            // Nobody took the head: the tape grows by a fresh blank cell.
            return {next, {left_behind, Particle{kBlank, 1, 0, offset(a.move), -1, 0}}};
        }
        return {g, {p}};
    };
    alg.evolve_global = [tm](const Global& g) { return Global{g.dq, tm->start()}; };

    alg.domains.render_global = [tm](const Global& g) {
        return tm->state_name(g.q) + "," + tm->state_name(g.dq);
    };
    alg.domains.render_particle = [tm](const Particle& p) {
        return tm->symbol_name(p.symbol) + "," + std::to_string(p.head) + "," +
               std::to_string(p.pending_head) + "," + std::to_string(p.last_move) + "," +
               std::to_string(p.next_move) + "," + std::to_string(p.handoff);
    };

    std::vector<Global> globals;
    for (StateId q : tm->states())
        for (StateId dq : tm->states()) globals.push_back(Global{q, dq});
    std::vector<Particle> particles;
    for (SymbolId z : tm->tape_alphabet())
        for (int h : {-1, 0, 1})
            for (int dh : {0, 1})
                for (int o : {-1, 1})
                    for (int dout : {-1, 1})
                        for (int a : {0, 1}) particles.push_back(Particle{z, h, dh, o, dout, a});
    alg.domains.globals = std::move(globals);
    alg.domains.particles = std::move(particles);
    alg.domains.may_create_particles = true;
    alg.domains.may_destroy_particles = false;
    return alg;
}

std::vector<Global> boundary_globals(const TuringMachine& tm) {
    std::vector<Global> out;
    for (StateId q : tm.states()) out.push_back(Global{q, tm.start()});
    return out;
}

PmState psi(const Configuration& c_in) {
    Configuration c = canonical(c_in);
    const auto n = c.head;
    const auto len = static_cast<std::int64_t>(c.tape.size());
    if (n < 1 || n > len)
        throw UntranslatableConfiguration("head position " + std::to_string(n) +
                                          " outside the stored tape of length " + std::to_string(len));
    PmState s;
    s.global = Global{c.state, StateId{0}};
    for (std::int64_t j = 1; j <= len; ++j) {
        int h = j == n ? 1 : (j == n + 1 ? -1 : 0);
        s.particles.push_back(Particle{c.tape[static_cast<std::size_t>(j - 1)], h, 0, -1, -1, 0});
    }
    return s;
}

Configuration psi_inverse(const PmState& s) {
    std::int64_t head = 0;
    Configuration c{s.global.q, {}, 0};
    for (std::size_t j = 0; j < s.particles.size(); ++j) {
        c.tape.push_back(s.particles[j].symbol);
        if (s.particles[j].head == 1) {
            if (head != 0) throw EmulationError("more than one head marker");
            head = static_cast<std::int64_t>(j + 1);
        }
    }
    if (head == 0) throw EmulationError("no head marker");
    c.head = head;
    return canonical(std::move(c));
}

std::optional<std::pair<std::string, std::string>> check_boundary(const TuringMachine& tm,
                                                                  const PmState& s,
                                                                  const Configuration& expected) {
    using Failure = std::pair<std::string, std::string>;
    const auto& p = s.particles;
    auto heads = std::count_if(p.begin(), p.end(), [](const Particle& x) { return x.head == 1; });
    if (heads != 1)
        return Failure{"head-marker", std::to_string(heads) + " particles carry head = 1"};
    Configuration back = psi_inverse(s);
    if (back != canonical(expected))
        return Failure{"psi-inverse-mismatch",
                       "particles read " + render_config_line(tm, 0, back).substr(4) +
                           ", machine is " + render_config_line(tm, 0, expected).substr(4)};

    const auto n = back.head;
    const auto size = static_cast<std::int64_t>(p.size());
    const auto prev = n - p[static_cast<std::size_t>(n - 1)].last_move;
    // Only the start configuration with a one-cell tape has its previous-head
    // cell outside the particles; then no particle may carry the marker.
    const bool prev_exists = prev >= 1 && prev <= size;
    if (prev_exists && p[static_cast<std::size_t>(prev - 1)].head != -1)
        return Failure{"previous-head-marker",
                       "particle " + std::to_string(prev) + " should carry head = -1"};
    for (std::int64_t j = 1; j <= size; ++j) {
        if (j == n || (prev_exists && j == prev)) continue;
        if (p[static_cast<std::size_t>(j - 1)].head != 0)
            return Failure{"stray-head-marker",
                           "particle " + std::to_string(j) + " carries head = " +
                               std::to_string(p[static_cast<std::size_t>(j - 1)].head)};
    }
    for (std::size_t j = 0; j < p.size(); ++j)
        if (p[j].pending_head != 0 || p[j].next_move != -1 || p[j].handoff != 0)
            return Failure{"pending-flags", "particle " + std::to_string(j + 1) +
                                                " has unreset interaction flags"};
    if (s.global.dq != tm.start()) return Failure{"dq-not-start", "dq=" + tm.state_name(s.global.dq)};
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

}  // namespace ptm::t2
