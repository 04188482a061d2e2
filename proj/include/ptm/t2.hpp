#pragma once

// Constant-size construction: particles carry no index. The head is a marker
// on one particle (head = 1), the cell it last came from is marked
// head = -1, and the head moves by neighbor-only pull interactions between
// adjacent particles. Global value and particles range over finite domains.

#include "ptm/cosim.hpp"
#include "ptm/engine.hpp"
#include "ptm/turing.hpp"

#include <string_view>

namespace ptm::t2 {

struct Particle {
    SymbolId symbol;
    int head = 0;          // 1 current head cell, -1 previous head cell, 0 otherwise
    int pending_head = 0;  // set when the head will move onto this particle
    int last_move = -1;    // direction the head moved to reach this cell
    int next_move = -1;    // accumulated direction of the pending move
    int handoff = 0;       // set on the head particle once a neighbor takes the head
    bool operator==(const Particle&) const = default;
};

struct Global {
    StateId q;
    StateId dq;  // state accumulator, `start` at step boundaries
    bool operator==(const Global&) const = default;
};

using PmState = pm::State<Global, Particle>;
using PmAlgorithm = pm::Algorithm<Global, Particle>;

/// Throws InvalidMachine if `validate(tm)` reports violations. The returned
/// bundle declares the full finite domains Q x Q and
/// Gamma x {-1,0,1} x {0,1} x {-1,1} x {-1,1} x {0,1}.
PmAlgorithm compile(const TuringMachine& tm);

/// Globals reachable at step boundaries: (q, start) for every state q.
std::vector<Global> boundary_globals(const TuringMachine& tm);

/// Requires the head inside the stored prefix. The previous-head marker goes
/// on the cell right of the head; when the head is on the last stored cell
/// the marker is omitted. Throws UntranslatableConfiguration otherwise.
PmState psi(const Configuration& c);

/// Throws EmulationError unless exactly one particle has head = 1.
Configuration psi_inverse(const PmState& s);

std::optional<std::pair<std::string, std::string>> check_boundary(const TuringMachine& tm,
                                                                  const PmState& s,
                                                                  const Configuration& expected);

CosimReport cosim(const TuringMachine& tm, std::string_view input, std::size_t max_steps);
CosimReport cosim(const TuringMachine& tm, const PmAlgorithm& alg, std::string_view input,
                  std::size_t max_steps);

}  // namespace ptm::t2
