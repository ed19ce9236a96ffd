#pragma once

#include <stdexcept>
#include <string>

namespace addspan {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element/spec arity mismatch, or operands drawn from different groups.
class DimensionError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// An enumeration or transform would exceed a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (bad exponent, non-dissociated
/// set passed to the Rudin probe, l = 0, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Fourier work was requested on a spec with an unbounded factor.
class RequiresEmbeddingError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A theorem-guaranteed implication failed. Always a bug, never a data property.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace addspan
