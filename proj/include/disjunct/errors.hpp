#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disjunct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed .dmat input. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason, const std::string& source = {})
        : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
                reason),
          line_(line),
          reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// An enumeration would exceed its configured case budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace disjunct
