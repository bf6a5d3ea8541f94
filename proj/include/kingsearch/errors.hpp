#pragma once

#include <stdexcept>
#include <string>

namespace kingsearch {

/// A session was asked a fresh pair after spending its whole budget.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumerating completions would exceed the configured unknown-pair limit.
class EnumerationLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed fixture, transcript or strategy-tree text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace kingsearch
