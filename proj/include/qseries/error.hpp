#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qseries {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was not met (order/modulus mismatch,
/// out-of-range argument, malformed value).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// The constant term of a series is not a unit, so it has no inverse.
class InversionError : public Error {
public:
    using Error::Error;
};

/// An expression could not be evaluated (unbound name, bad order).
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// A constant-term oracle failed a validation gate or refused a request.
class OracleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace qseries
