#pragma once

#include <stdexcept>
#include <string>

namespace ccount {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input/output width or operand-count mismatch between circuits.
class ArityError : public Error {
public:
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

/// Parameter outside its legal range (k > 2^n, inverted interval, ...).
class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

/// A counting backend refused the instance (too many inputs, node cap hit).
class BackendLimitError : public Error {
public:
    explicit BackendLimitError(const std::string& msg) : Error(msg) {}
};

/// Conditioning on a predicate with zero models.
class ImpossibleConditionError : public Error {
public:
    explicit ImpossibleConditionError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (CCIR netlists, DIMACS, grid layouts).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace ccount
