#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksi {

/// Invalid caller-supplied parameter (probability out of range, 2k >= n, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input for which the requested quantity is undefined (empty graph, n < 2, ...).
class UndefinedInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The request exceeds a configured size cap of a dense or exhaustive routine.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Node id outside [0, n).
class NodeIndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed edge-list text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ksi
