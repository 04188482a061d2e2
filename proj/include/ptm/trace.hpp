#pragma once

#include "ptm/cosim.hpp"
#include "ptm/engine.hpp"
#include "ptm/turing.hpp"

#include <string>
#include <vector>

namespace ptm {

/// One `t=<int> q=<name> n=<int> tape=<tape>` line per configuration, t from 1.
std::string render_tm_trace(const TuringMachine& tm, const std::vector<Configuration>& trace);

/// One `t=<int> g=(...) p=[...]` line per state, t from 1.
template <class G, class P>
std::string render_pm_trace(const pm::Domains<G, P>& d, const std::vector<pm::State<G, P>>& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i)
        out += "t=" + std::to_string(i + 1) + " " + pm::render_state(d, trace[i]) + "\n";
    return out;
}

/// `COSIM ok` or `COSIM divergence t=<int> criterion=<name>`.
std::string cosim_summary(const CosimReport& r);

/// Interleaved `TM ...` / `PM ...` lines when `with_trace`, then the summary line.
std::string render_cosim(const TuringMachine& tm, const CosimReport& r, bool with_trace);

}  // namespace ptm
