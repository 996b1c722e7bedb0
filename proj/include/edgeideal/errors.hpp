#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

/// Input violates a documented precondition (non-cover passed as a cover,
/// invalid matching, broken seed graph, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to go beyond its configured size cutoff.
class OversizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A closed-form routine was called with a parameter it has no formula for.
class UnsupportedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when not line-bound.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace edgeideal
