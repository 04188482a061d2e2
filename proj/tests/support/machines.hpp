#pragma once

// Machines assembled through the TuringMachine API, independent of the
// file parser and of the embedded fixtures.

#include "ptm/turing.hpp"

#include <string>
#include <vector>

namespace ptm::testing {

inline void put(TuringMachine& tm, const std::string& q, const std::string& z, const std::string& q2,
                const std::string& z2, Move m) {
    tm.set_transition(*tm.find_state(q), *tm.find_symbol(z), Action{*tm.find_state(q2), *tm.find_symbol(z2), m});
}

/// Seek the first blank and accept.
inline TuringMachine m0() {
    TuringMachine tm({"s", "acc", "rej"}, "s", "acc", "rej", {"a"}, {"a"});
    put(tm, "s", "|-", "s", "|-", Move::Right);
    put(tm, "s", "a", "s", "a", Move::Right);
    put(tm, "s", "_", "acc", "_", Move::Right);
    for (const char* q : {"acc", "rej"})
        for (const char* z : {"|-", "_", "a"}) put(tm, q, z, q, z, Move::Right);
    return tm;
}

/// Same as m0 with its start state literally named "start".
inline TuringMachine m0_named_start() {
    TuringMachine tm({"start", "acc", "rej"}, "start", "acc", "rej", {"a"}, {"a"});
    put(tm, "start", "|-", "start", "|-", Move::Right);
    put(tm, "start", "a", "start", "a", Move::Right);
    put(tm, "start", "_", "acc", "_", Move::Right);
    for (const char* q : {"acc", "rej"})
        for (const char* z : {"|-", "_", "a"}) put(tm, q, z, q, z, Move::Right);
    return tm;
}

/// Walks right over a's, turns at the blank, walks back to the end marker and
/// accepts. Exercises left moves and the previous-head bookkeeping.
inline TuringMachine bounce() {
    TuringMachine tm({"s", "back", "acc", "rej"}, "s", "acc", "rej", {"a", "b"}, {"a"});
    put(tm, "s", "|-", "s", "|-", Move::Right);
    put(tm, "s", "a", "s", "b", Move::Right);
    put(tm, "s", "b", "rej", "b", Move::Right);
    put(tm, "s", "_", "back", "_", Move::Left);
    put(tm, "back", "|-", "acc", "|-", Move::Right);
    put(tm, "back", "a", "rej", "a", Move::Right);
    put(tm, "back", "b", "back", "a", Move::Left);
    put(tm, "back", "_", "rej", "_", Move::Right);
    for (const char* q : {"acc", "rej"})
        for (const char* z : {"|-", "_", "a", "b"}) put(tm, q, z, q, z, Move::Right);
    return tm;
}

inline Configuration config(const TuringMachine& tm, const std::string& q, const std::vector<std::string>& tape,
                            std::int64_t n) {
    Configuration c{*tm.find_state(q), {}, n};
    for (const auto& z : tape) c.tape.push_back(*tm.find_symbol(z));
    return c;
}

}  // namespace ptm::testing
