#pragma once

// Embedded corpus: machine descriptions and small finite particle methods
// over integer values, addressable by name from the command line.

#include "ptm/engine.hpp"
#include "ptm/turing.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ptm::fixtures {

struct MachineFixture {
    std::string name;
    std::string text;
};

const std::vector<MachineFixture>& machines();

/// Throws std::out_of_range for an unknown name.
const MachineFixture& machine(std::string_view name);

TuringMachine load(std::string_view name);

using IntAlgorithm = pm::Algorithm<int, int>;
using IntState = pm::State<int, int>;

struct PmFixture {
    std::string name;
    std::string description;
    IntAlgorithm alg;
    IntState instance;
};

const std::vector<PmFixture>& particle_methods();

/// Throws std::out_of_range for an unknown name.
const PmFixture& particle_method(std::string_view name);

}  // namespace ptm::fixtures
