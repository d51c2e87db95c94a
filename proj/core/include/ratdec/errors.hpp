#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratdec {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problems with user-supplied data: malformed expressions, zero denominators,
// unusable factor oracles, inputs outside the supported range.
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    std::size_t position;  // 1-based offset into the input text
    ParseError(const std::string& what, std::size_t pos)
        : InputError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ZeroDenominatorError : InputError {
    ZeroDenominatorError() : InputError("denominator is zero") {}
};

// A supplied factor list does not multiply back to the input.
struct UnverifiedFactorsError : InputError {
    using InputError::InputError;
};

// Factoring in three or more variables needs a supplied factor list.
struct MissingOracleError : InputError {
    using InputError::InputError;
};

// Failures that a change of variables may repair; the decomposition driver
// retries with shifts before letting these escape.
struct RetryableError : Error {
    using Error::Error;
};

struct HypothesisError : RetryableError {
    using RetryableError::RetryableError;
};

struct InsufficientCandidatesError : RetryableError {
    using RetryableError::RetryableError;
};

struct NoGoodSpecializationError : RetryableError {
    using RetryableError::RetryableError;
};

// Violations of invariants that valid inputs cannot trigger.
struct InternalError : Error {
    using Error::Error;
};

struct NotDivisibleError : InternalError {
    explicit NotDivisibleError(const std::string& what = "polynomial division is not exact")
        : InternalError(what) {}
};

struct NotDarbouxError : InternalError {
    NotDarbouxError() : InternalError("polynomial is not Darboux for this derivation") {}
};

struct BasisNotBooleanError : InternalError {
    using InternalError::InternalError;
};

struct NoSolutionError : InternalError {
    using InternalError::InternalError;
};

struct AmbiguousSolutionError : InternalError {
    using InternalError::InternalError;
};

}  // namespace ratdec
