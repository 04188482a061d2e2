#include "ptm/trace.hpp"

namespace ptm {

std::string render_tm_trace(const TuringMachine& tm, const std::vector<Configuration>& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i) out += render_config_line(tm, i + 1, trace[i]) + "\n";
    return out;
}

std::string cosim_summary(const CosimReport& r) {
    if (!r.divergence) return "COSIM ok";
    return "COSIM divergence t=" + std::to_string(r.divergence->t) + " criterion=" + r.divergence->criterion;
}

std::string render_cosim(const TuringMachine& tm, const CosimReport& r, bool with_trace) {
    std::string out;
    if (with_trace) {
        for (std::size_t i = 0; i < r.tm_trace.size(); ++i) {
            out += "TM " + render_config_line(tm, i + 1, r.tm_trace[i]) + "\n";
            out += "PM t=" + std::to_string(i + 1) + " " + r.pm_trace[i] + "\n";
        }
    }
    return out + cosim_summary(r) + "\n";
}

}  // namespace ptm
