#pragma once

#include <stdexcept>
#include <string>

namespace erasurelab {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q has two distinct prime factors.
struct NotPrimePower : Error {
    using Error::Error;
};

// Field order exceeds the configured limit.
struct TooLarge : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Generator matrix has rank < k.
struct RankDeficient : Error {
    using Error::Error;
};

struct EmptyMatrix : Error {
    using Error::Error;
};

// An enumeration would exceed its configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct InconsistentInputs : Error {
    using Error::Error;
};

// Codes passed to a comparison do not share (n, k, q).
struct MismatchedParameters : Error {
    using Error::Error;
};

// Exhaustive search found no witness (indicates an implementation bug).
struct SearchFailed : Error {
    using Error::Error;
};

// Received word matches no codeword (harness bug, not a channel event).
struct Inadmissible : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace erasurelab
