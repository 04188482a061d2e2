#include "ptm/turing.hpp"

#include "ptm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ptm {

namespace {

std::size_t index_of(const std::vector<std::string>& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("head position overflow");
    return r;
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states, std::string_view start,
                             std::string_view accept, std::string_view reject,
                             const std::vector<std::string>& tape_symbols,
                             const std::vector<std::string>& input_symbols) {
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (states[i] == states[j])
                throw std::invalid_argument("duplicate state '" + states[i] + "'");

    auto lookup = [&](std::string_view name, const char* role) {
        std::size_t i = index_of(states, name);
        if (i == states.size())
            throw std::invalid_argument(std::string(role) + " state '" + std::string(name) +
                                        "' is not declared");
        return i;
    };
    std::size_t s = lookup(start, "start");
    lookup(accept, "accept");
    lookup(reject, "reject");

    // Start is forced to rank 0, everything else keeps declaration order.
    std::rotate(states.begin(), states.begin() + static_cast<std::ptrdiff_t>(s),
                states.begin() + static_cast<std::ptrdiff_t>(s) + 1);
    state_names_ = std::move(states);
    accept_ = StateId{static_cast<std::uint32_t>(index_of(state_names_, accept))};
    reject_ = StateId{static_cast<std::uint32_t>(index_of(state_names_, reject))};

    symbol_names_ = {std::string(kEndMarkerToken), std::string(kBlankToken)};
    tape_ = {true, true};
    input_ = {false, false};
    auto intern = [&](const std::string& name) {
        std::size_t i = index_of(symbol_names_, name);
        if (i == symbol_names_.size()) {
            symbol_names_.push_back(name);
            tape_.push_back(false);
            input_.push_back(false);
        }
        return i;
    };
    for (const auto& z : tape_symbols) tape_[intern(z)] = true;
    for (const auto& z : input_symbols) input_[intern(z)] = true;

    delta_.assign(state_names_.size() * symbol_names_.size(), std::nullopt);
}

std::optional<StateId> TuringMachine::find_state(std::string_view name) const {
    std::size_t i = index_of(state_names_, name);
    if (i == state_names_.size()) return std::nullopt;
    return StateId{static_cast<std::uint32_t>(i)};
}

std::optional<SymbolId> TuringMachine::find_symbol(std::string_view name) const {
    std::size_t i = index_of(symbol_names_, name);
    if (i == symbol_names_.size()) return std::nullopt;
    return SymbolId{static_cast<std::uint32_t>(i)};
}

std::vector<StateId> TuringMachine::states() const {
    std::vector<StateId> out;
    for (std::uint32_t i = 0; i < state_names_.size(); ++i) out.push_back(StateId{i});
    return out;
}

std::vector<SymbolId> TuringMachine::tape_alphabet() const {
    std::vector<SymbolId> out;
    for (std::uint32_t i = 0; i < symbol_names_.size(); ++i)
        if (tape_[i]) out.push_back(SymbolId{i});
    return out;
}

std::vector<SymbolId> TuringMachine::input_alphabet() const {
    std::vector<SymbolId> out;
    for (std::uint32_t i = 0; i < symbol_names_.size(); ++i)
        if (input_[i]) out.push_back(SymbolId{i});
    return out;
}

std::size_t TuringMachine::slot(StateId q, SymbolId z) const {
    if (q.rank >= state_names_.size() || z.index >= symbol_names_.size())
        throw std::out_of_range("transition index out of range");
    return q.rank * symbol_names_.size() + z.index;
}

void TuringMachine::set_transition(StateId q, SymbolId z, Action a) {
    if (a.next.rank >= state_names_.size() || a.write.index >= symbol_names_.size())
        throw std::out_of_range("transition target out of range");
    delta_[slot(q, z)] = a;
}

const std::optional<Action>& TuringMachine::transition(StateId q, SymbolId z) const {
    return delta_[slot(q, z)];
}

const Action& TuringMachine::action(StateId q, SymbolId z) const {
    const auto& a = transition(q, z);
    if (!a)
        throw std::out_of_range("no transition at (" + state_name(q) + "," + symbol_name(z) + ")");
    return *a;
}

Configuration canonical(Configuration c) {
    while (c.tape.size() > 1 && c.tape.back() == kBlank) c.tape.pop_back();
    return c;
}

SymbolId read_cell(const Configuration& c, std::int64_t n) {
    if (n < 1) throw std::out_of_range("head left of the tape");
    auto i = static_cast<std::uint64_t>(n - 1);
    return i < c.tape.size() ? c.tape[i] : kBlank;
}

ValidityReport validate(const TuringMachine& tm) {
    ValidityReport report;
    auto& v = report.violations;
    auto at = [&](StateId q, SymbolId z) {
        return " at (" + tm.state_name(q) + "," + tm.symbol_name(z) + ")";
    };

    if (tm.accept() == tm.reject()) v.push_back("accept and reject are the same state");
    for (SymbolId z : tm.input_alphabet()) {
        if (z == kEndMarker || z == kBlank)
            v.push_back("reserved symbol " + tm.symbol_name(z) + " in input alphabet");
        else if (!tm.is_tape_symbol(z))
            v.push_back("input symbol " + tm.symbol_name(z) + " not in tape alphabet");
    }

    const auto tape = tm.tape_alphabet();
    for (StateId q : tm.states()) {
        for (std::uint32_t zi = 0; zi < tm.symbol_count(); ++zi) {
            SymbolId z{zi};
            const auto& a = tm.transition(q, z);
            if (!tm.is_tape_symbol(z)) {
                if (a) v.push_back("transition on non-tape symbol" + at(q, z));
                continue;
            }
            if (!a) {
                v.push_back("missing transition" + at(q, z));
                continue;
            }
            if (!tm.is_tape_symbol(a->write))
                v.push_back("writes non-tape symbol " + tm.symbol_name(a->write) + at(q, z));
            if (z == kEndMarker) {
                if (a->write != kEndMarker) v.push_back("overwrites end marker" + at(q, z));
                if (a->move != Move::Right) v.push_back("left move on end marker" + at(q, z));
            } else if (a->write == kEndMarker) {
                v.push_back("writes end marker" + at(q, z));
            }
            if (q == tm.accept() && a->next != tm.accept())
                v.push_back("accept not absorbing" + at(q, z));
            if (q == tm.reject() && a->next != tm.reject())
                v.push_back("reject not absorbing" + at(q, z));
        }
    }
    return report;
}

Configuration start_config(const TuringMachine& tm, std::span<const SymbolId> input) {
    Configuration c{tm.start(), {kEndMarker}, 1};
    for (SymbolId z : input) {
        if (z.index >= tm.symbol_count() || !tm.is_input_symbol(z))
            throw SymbolNotInInputAlphabet("symbol not in input alphabet");
        c.tape.push_back(z);
    }
    return c;
}

std::vector<SymbolId> parse_input(const TuringMachine& tm, std::string_view input) {
    std::vector<std::string> tokens;
    bool spaced = std::any_of(input.begin(), input.end(),
                              [](unsigned char ch) { return std::isspace(ch); });
    if (spaced) {
        std::string cur;
        for (char ch : input) {
            if (std::isspace(static_cast<unsigned char>(ch))) {
                if (!cur.empty()) tokens.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    } else {
        for (char ch : input) tokens.emplace_back(1, ch);
    }

    std::vector<SymbolId> out;
    for (const auto& t : tokens) {
        auto z = tm.find_symbol(t);
        if (!z || !tm.is_input_symbol(*z))
            throw SymbolNotInInputAlphabet("symbol '" + t + "' not in input alphabet");
        out.push_back(*z);
    }
    return out;
}

Configuration start_config(const TuringMachine& tm, std::string_view input) {
    auto symbols = parse_input(tm, input);
    return start_config(tm, symbols);
}

Configuration tm_step(const TuringMachine& tm, const Configuration& c) {
    const Action& a = tm.action(c.state, read_cell(c, c.head));
    Configuration next = c;
    auto cell = static_cast<std::size_t>(c.head - 1);
    if (cell >= next.tape.size()) next.tape.resize(cell + 1, kBlank);
    next.tape[cell] = a.write;
    next.state = a.next;
    next.head = checked_add(c.head, offset(a.move));
    if (next.head < 1) throw std::logic_error("head moved left of the end marker");
    return canonical(std::move(next));
}

TmRun tm_run(const TuringMachine& tm, const Configuration& start, std::size_t max_steps) {
    TmRun run;
    run.trace.push_back(canonical(start));
    for (std::size_t t = 0;; ++t) {
        const auto& c = run.trace.back();
        if (c.state == tm.accept()) {
            run.verdict = RunVerdict::Accepted;
            break;
        }
        if (c.state == tm.reject()) {
            run.verdict = RunVerdict::Rejected;
            break;
        }
        if (t == max_steps) break;
        run.trace.push_back(tm_step(tm, c));
    }
    return run;
}

TmRun tm_run(const TuringMachine& tm, std::string_view input, std::size_t max_steps) {
    return tm_run(tm, start_config(tm, input), max_steps);
}

std::string render_tape(const TuringMachine& tm, const Configuration& c) {
    std::string out;
    for (SymbolId z : canonical(c).tape) out += tm.symbol_name(z);
    return out;
}

std::string render_config_line(const TuringMachine& tm, std::size_t t, const Configuration& c) {
    return "t=" + std::to_string(t) + " q=" + tm.state_name(c.state) +
           " n=" + std::to_string(c.head) + " tape=" + render_tape(tm, c);
}

std::string_view to_string(RunVerdict v) {
    switch (v) {
        case RunVerdict::Accepted: return "accepted";
        case RunVerdict::Rejected: return "rejected";
        case RunVerdict::Running: return "running";
    }
    return "running";
}

}  // namespace ptm
