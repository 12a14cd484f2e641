#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bosonorder {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A truncated infinite sum did not meet its error certificate.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The series does not converge at the requested point at all.
class DivergenceError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

// A configured size limit (word cap, term budget) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction failed. Never expected to fire.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Lexing or parsing failure, with the byte offset of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace bosonorder
