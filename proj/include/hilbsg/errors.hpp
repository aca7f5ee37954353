#pragma once

// Error types shared by all hilbsg modules.
//
// Two families matter to callers: ParseError (bad input text, the CLI exits
// with 1) and ComputationError (the input parsed but the algebra refused it,
// the CLI exits with 2). Everything else is a usage error.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbsg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a polynomial or a job file.
/// `line` is 0 when the error does not belong to a file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without the position prefix.
    const std::string& message() const noexcept { return message_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string out;
        if (line != 0) out += "line " + std::to_string(line);
        if (column != 0) out += (out.empty() ? "column " : ", column ") + std::to_string(column);
        if (!out.empty()) out += ": ";
        return out + what;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class ComputationError : public Error {
public:
    using Error::Error;
};

/// Ideal is not primary to the maximal ideal at the origin.
class NotPrimary : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotStabilized : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DegreeMismatch : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// q : m contains a unit, i.e. q = m.
class DegenerateColon : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Semigroup ideal complement did not close up within the configured bound.
class NotCofinite : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Closure gap did not close up within the configured bound.
class NotFinite : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class MissingType : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotDim2 : public ComputationError {
public:
    using ComputationError::ComputationError;
};

}  // namespace hilbsg
