#pragma once

#include <stdexcept>
#include <string>

namespace lieforms {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejected type string. The kind distinguishes grammar failures from
/// semantically invalid (family, rank, twist) combinations.
struct ParseError : Error {
    enum class Kind { Malformed, RankOutOfRange, TwistUnavailable };

    Kind kind;
    ParseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

/// Raised when an operation requires a compact inner form that the
/// classification rules out for the requested (type, twist).
struct PredictedAbsenceError : Error {
    using Error::Error;
};

/// A structural consistency check failed. Always a bug, never user input.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace lieforms
