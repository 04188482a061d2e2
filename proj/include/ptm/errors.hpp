#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptm {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input string contains a symbol outside the machine's input alphabet.
class SymbolNotInInputAlphabet : public Error {
public:
    using Error::Error;
};

/// A construction was asked to compile a machine that does not validate.
class InvalidMachine : public Error {
public:
    using Error::Error;
};

/// A back translation found a particle state that no correct emulation
/// can produce (broken index integrity, missing or duplicated head marker).
class EmulationError : public Error {
public:
    using Error::Error;
};

/// A configuration that a forward translation cannot represent.
class UntranslatableConfiguration : public Error {
public:
    using Error::Error;
};

/// The halting decider was invoked on a particle method outside its scope.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// The state bound |G| * sum |P|^j does not fit in 64 bits.
class BoundOverflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column),
          message_(message) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace ptm
