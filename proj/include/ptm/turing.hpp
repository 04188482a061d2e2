#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptm {

/// A machine state. The rank is the state's position in the machine's strict
/// total order; the start state always has rank 0.
struct StateId {
    std::uint32_t rank = 0;
    auto operator<=>(const StateId&) const = default;
};

/// A tape symbol, identified by its index in the machine's symbol table.
struct SymbolId {
    std::uint32_t index = 0;
    auto operator<=>(const SymbolId&) const = default;
};

inline constexpr SymbolId kEndMarker{0};
inline constexpr SymbolId kBlank{1};
inline constexpr std::string_view kEndMarkerToken = "|-";
inline constexpr std::string_view kBlankToken = "_";

enum class Move : std::int8_t { Left = -1, Right = 1 };

constexpr int offset(Move m) { return static_cast<int>(m); }

struct Action {
    StateId next;
    SymbolId write;
    Move move = Move::Right;
    bool operator==(const Action&) const = default;
};

/// Deterministic one-tape Turing machine with an end marker and a blank.
///
/// Symbol index 0 is the end marker `|-` and index 1 is the blank `_`; both
/// are always tape symbols. Further symbols follow in declaration order.
/// The transition table may be partial while a machine is being built;
/// `validate` reports missing entries.
class TuringMachine {
public:
    /// States are ranked by declaration order with `start` moved to rank 0.
    /// Throws std::invalid_argument on duplicate or unknown names.
    TuringMachine(std::vector<std::string> states, std::string_view start,
                  std::string_view accept, std::string_view reject,
                  const std::vector<std::string>& tape_symbols,
                  const std::vector<std::string>& input_symbols);

    std::size_t state_count() const { return state_names_.size(); }
    std::size_t symbol_count() const { return symbol_names_.size(); }

    const std::string& state_name(StateId q) const { return state_names_.at(q.rank); }
    const std::string& symbol_name(SymbolId z) const { return symbol_names_.at(z.index); }
    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view name) const;

    StateId start() const { return StateId{0}; }
    StateId accept() const { return accept_; }
    StateId reject() const { return reject_; }
    bool is_halting(StateId q) const { return q == accept_ || q == reject_; }

    std::vector<StateId> states() const;
    /// Tape alphabet including the end marker and the blank.
    std::vector<SymbolId> tape_alphabet() const;
    std::vector<SymbolId> input_alphabet() const;
    bool is_tape_symbol(SymbolId z) const { return tape_.at(z.index); }
    bool is_input_symbol(SymbolId z) const { return input_.at(z.index); }

    void set_transition(StateId q, SymbolId z, Action a);
    const std::optional<Action>& transition(StateId q, SymbolId z) const;
    /// Like `transition` but throws std::out_of_range when the entry is missing.
    const Action& action(StateId q, SymbolId z) const;

private:
    std::size_t slot(StateId q, SymbolId z) const;

    std::vector<std::string> state_names_;
    std::vector<std::string> symbol_names_;
    std::vector<bool> tape_;
    std::vector<bool> input_;
    StateId accept_;
    StateId reject_;
    std::vector<std::optional<Action>> delta_;
};

/// (state, tape prefix starting with the end marker, 1-based head position).
/// Canonical form has no trailing blanks; all toolkit operations return
/// canonical configurations so defaulted equality matches the semantics of
/// an implicit infinite blank suffix.
struct Configuration {
    StateId state;
    std::vector<SymbolId> tape;
    std::int64_t head = 1;
    bool operator==(const Configuration&) const = default;
};

Configuration canonical(Configuration c);

/// Symbol at 1-based position n; blank beyond the stored prefix.
SymbolId read_cell(const Configuration& c, std::int64_t n);

struct ValidityReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidityReport validate(const TuringMachine& tm);

Configuration start_config(const TuringMachine& tm, std::span<const SymbolId> input);

/// Tokenizes `input` (whitespace-separated tokens if it contains whitespace,
/// otherwise one symbol per character) and builds the start configuration.
Configuration start_config(const TuringMachine& tm, std::string_view input);

std::vector<SymbolId> parse_input(const TuringMachine& tm, std::string_view input);

Configuration tm_step(const TuringMachine& tm, const Configuration& c);

enum class RunVerdict { Accepted, Rejected, Running };

struct TmRun {
    RunVerdict verdict = RunVerdict::Running;
    std::vector<Configuration> trace;  // trace[0] is the start configuration
};

TmRun tm_run(const TuringMachine& tm, const Configuration& start, std::size_t max_steps);
TmRun tm_run(const TuringMachine& tm, std::string_view input, std::size_t max_steps);

std::string render_tape(const TuringMachine& tm, const Configuration& c);

/// `t=<int> q=<name> n=<int> tape=<canonical string>`
std::string render_config_line(const TuringMachine& tm, std::size_t t, const Configuration& c);

std::string_view to_string(RunVerdict v);

}  // namespace ptm
