#include "ptm/fixtures.hpp"

#include "ptm/machine_file.hpp"

#include <stdexcept>

namespace ptm::fixtures {

namespace {

IntAlgorithm int_algorithm(std::vector<int> globals, std::vector<int> particles) {
    IntAlgorithm alg;
    alg.neighborhood = [](const int&, std::span<const int>, std::size_t) { return std::vector<std::size_t>{}; };
    alg.stop = [](const int&) { return false; };
    alg.interact = [](const int&, const int& a, const int& b) { return std::pair{a, b}; };
    alg.evolve = [](const int& g, const int& p) { return std::pair{g, std::vector<int>{p}}; };
    alg.evolve_global = [](const int& g) { return g; };
    alg.domains.render_global = [](const int& g) { return std::to_string(g); };
    alg.domains.render_particle = [](const int& p) { return std::to_string(p); };
    alg.domains.globals = std::move(globals);
    alg.domains.particles = std::move(particles);
    alg.domains.may_create_particles = false;
    return alg;
}

PmFixture counter3(bool with_stop) {
    auto alg = int_algorithm({0, 1, 2}, {0});
    alg.evolve_global = [](const int& g) { return (g + 1) % 3; };
    if (with_stop) alg.stop = [](const int& g) { return g == 2; };
    return PmFixture{with_stop ? "counter3-stop" : "counter3",
                     with_stop ? "global counter mod 3, stops at 2" : "global counter mod 3, never stops",
                     std::move(alg), IntState{0, {}}};
}

PmFixture drain() {
    auto alg = int_algorithm({0, 1, 2}, {0, 1, 2});
    alg.stop = [](const int& g) { return g == 2; };
    alg.evolve = [](const int&, const int& p) -> std::pair<int, std::vector<int>> {
        if (p == 0) return {0, {}};
        return {1, {p - 1}};
    };
    alg.evolve_global = [](const int& g) { return g == 1 ? 0 : 2; };
    return PmFixture{"drain", "particles count down and vanish at 0; stops once none are left",
                     std::move(alg), IntState{0, {2, 1, 2}}};
}

PmFixture rotate() {
    auto alg = int_algorithm({0}, {0, 1, 2});
    alg.neighborhood = [](const int&, std::span<const int> p, std::size_t j) {
        std::vector<std::size_t> out;
        if (j > 1) out.push_back(j - 1);
        if (j < p.size()) out.push_back(j + 1);
        return out;
    };
    alg.evolve = [](const int& g, const int& p) { return std::pair{g, std::vector<int>{(p + 1) % 3}}; };
    return PmFixture{"rotate", "particle values rotate mod 3", std::move(alg), IntState{0, {0, 1}}};
}

}  // namespace

const std::vector<MachineFixture>& machines() {
    static const std::vector<MachineFixture> all = {
        {"m0", R"tm(# Seek the first blank, then accept.
states: s acc rej
start: s
accept: acc
reject: rej
input_alphabet: a
tape_alphabet: a
delta: s |- -> s |- R
delta: s _ -> acc _ R
delta: s a -> s a R
delta: acc |- -> acc |- R
delta: acc _ -> acc _ R
delta: acc a -> acc a R
delta: rej |- -> rej |- R
delta: rej _ -> rej _ R
delta: rej a -> rej a R
)tm"},
        {"unary-successor", R"tm(# Appends one 1 to a unary number.
states: s go acc rej
start: s
accept: acc
reject: rej
input_alphabet: 1
tape_alphabet: 1
delta: s |- -> go |- R
delta: s _ -> rej _ R
delta: s 1 -> rej 1 R
delta: go |- -> rej |- R
delta: go _ -> acc 1 R
delta: go 1 -> go 1 R
delta: acc |- -> acc |- R
delta: acc _ -> acc _ R
delta: acc 1 -> acc 1 R
delta: rej |- -> rej |- R
delta: rej _ -> rej _ R
delta: rej 1 -> rej 1 R
)tm"},
        {"palindrome", R"tm(# Accepts even-length palindromes over {a,b}; X marks matched cells.
states: s q0 ra rb ca cb back acc rej
start: s
accept: acc
reject: rej
input_alphabet: a b
tape_alphabet: a b X
delta: s |- -> q0 |- R
delta: s _ -> rej _ R
delta: s a -> rej a R
delta: s b -> rej b R
delta: s X -> rej X R
delta: q0 |- -> rej |- R
delta: q0 _ -> acc _ R
delta: q0 a -> ra X R
delta: q0 b -> rb X R
delta: q0 X -> acc X R
delta: ra |- -> rej |- R
delta: ra _ -> ca _ L
delta: ra a -> ra a R
delta: ra b -> ra b R
delta: ra X -> ca X L
delta: rb |- -> rej |- R
delta: rb _ -> cb _ L
delta: rb a -> rb a R
delta: rb b -> rb b R
delta: rb X -> cb X L
delta: ca |- -> rej |- R
delta: ca _ -> rej _ R
delta: ca a -> back X L
delta: ca b -> rej b R
delta: ca X -> rej X R
delta: cb |- -> rej |- R
delta: cb _ -> rej _ R
delta: cb a -> rej a R
delta: cb b -> back X L
delta: cb X -> rej X R
delta: back |- -> rej |- R
delta: back _ -> rej _ R
delta: back a -> back a L
delta: back b -> back b L
delta: back X -> q0 X R
delta: acc |- -> acc |- R
delta: acc _ -> acc _ R
delta: acc a -> acc a R
delta: acc b -> acc b R
delta: acc X -> acc X R
delta: rej |- -> rej |- R
delta: rej _ -> rej _ R
delta: rej a -> rej a R
delta: rej b -> rej b R
delta: rej X -> rej X R
)tm"},
    };
    return all;
}

const MachineFixture& machine(std::string_view name) {
    for (const auto& m : machines())
        if (m.name == name) return m;
    throw std::out_of_range("unknown machine fixture '" + std::string(name) + "'");
}

TuringMachine load(std::string_view name) { return parse_machine(machine(name).text); }

const std::vector<PmFixture>& particle_methods() {
    static const std::vector<PmFixture> all = {counter3(false), counter3(true), drain(), rotate()};
    return all;
}

const PmFixture& particle_method(std::string_view name) {
    for (const auto& f : particle_methods())
        if (f.name == name) return f;
    throw std::out_of_range("unknown particle method fixture '" + std::string(name) + "'");
}

}  // namespace ptm::fixtures
