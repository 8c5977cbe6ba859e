#pragma once

#include <stdexcept>

namespace vest {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different fields.
struct MixedFieldError : Error {
    using Error::Error;
};

// Multiplicative inverse of zero (or a zero denominator) was requested.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// Finite enumeration of the rationals was requested.
struct InfiniteFieldError : Error {
    using Error::Error;
};

// Incompatible matrix/vector dimensions.
struct ShapeError : Error {
    using Error::Error;
};

// The instance lacks s or v (or has them) contrary to what the operation needs.
struct VariantError : Error {
    using Error::Error;
};

// A word contains symbols other than '0' and '1'.
struct AlphabetError : Error {
    using Error::Error;
};

// An enumeration would exceed the caller-supplied step budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Invalid construction arguments (non-prime modulus, malformed graph, ...).
struct DomainError : Error {
    using Error::Error;
};

// Unparsable input files or JSON documents.
struct MalformedInputError : Error {
    using Error::Error;
};

} // namespace vest
