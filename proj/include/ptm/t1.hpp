#pragma once

// Index-addressed tape construction: one particle per tape cell carrying its
// cell index, no neighborhood, identity interaction. The global value holds
// the machine state, the head index and the particle count, plus the
// accumulators the evolve sweep writes into.

#include "ptm/cosim.hpp"
#include "ptm/engine.hpp"
#include "ptm/turing.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string_view>

namespace ptm::t1 {

struct Particle {
    std::int64_t index = 1;  // cell index, >= 1
    SymbolId symbol;
    bool operator==(const Particle&) const = default;
};

struct Global {
    StateId q;
    StateId dq;  // state accumulator, `start` at step boundaries
    int d = -1;  // direction accumulator, -1 at step boundaries
    std::int64_t m = 1;  // head index
    std::int64_t count = 1;  // particle count
    bool operator==(const Global&) const = default;
};

using PmState = pm::State<Global, Particle>;
using PmAlgorithm = pm::Algorithm<Global, Particle>;

/// Throws InvalidMachine if `validate(tm)` reports violations.
PmAlgorithm compile(const TuringMachine& tm);

PmState psi(const Configuration& c);

/// Throws EmulationError unless the particles are non-empty and particle j
/// carries cell index j.
Configuration psi_inverse(const PmState& s);

/// First failing step-boundary criterion for a state that should emulate
/// `expected`, as (criterion name, detail).
std::optional<std::pair<std::string, std::string>> check_boundary(const TuringMachine& tm,
                                                                  const PmState& s,
                                                                  const Configuration& expected);

CosimReport cosim(const TuringMachine& tm, std::string_view input, std::size_t max_steps);
CosimReport cosim(const TuringMachine& tm, const PmAlgorithm& alg, std::string_view input,
                  std::size_t max_steps);

/// Uniform random values with head index, particle count and cell index in
/// 1..bound; states and directions range over their full domains.
Global random_global(const TuringMachine& tm, std::int64_t bound, std::mt19937_64& rng);
Particle random_particle(const TuringMachine& tm, std::int64_t bound, std::mt19937_64& rng);

/// Every value whose indices lie in 1..bound.
std::vector<Global> bounded_globals(const TuringMachine& tm, std::int64_t bound);
std::vector<Particle> bounded_particles(const TuringMachine& tm, std::int64_t bound);

}  // namespace ptm::t1
