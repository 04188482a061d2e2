#pragma once

#include "ptm/turing.hpp"

#include <string>
#include <string_view>

namespace ptm {

/// Parses the line-oriented machine description:
///
///     # comment
///     states: s acc rej
///     start: s
///     accept: acc
///     reject: rej
///     input_alphabet: a
///     tape_alphabet: a
///     delta: s a -> s a R
///
/// The end marker `|-` and the blank `_` are implicit tape symbols. Parsing
/// checks syntax and name resolution only; semantic rules are left to
/// `validate`. Throws ParseError carrying line and column.
TuringMachine parse_machine(std::string_view text);

TuringMachine load_machine(const std::string& path);

/// Canonical text form: fixed declaration order, one delta line per entry in
/// (state rank, symbol index) order.
std::string render_machine(const TuringMachine& tm);

}  // namespace ptm
