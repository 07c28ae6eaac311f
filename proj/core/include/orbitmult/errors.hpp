#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitmult {

// Base class for everything the library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A weight sequence fails to be non-increasing. `index` is the 0-based
// position of the first entry that is smaller than its successor's
// requirement, i.e. entries[index] < entries[index+1].
struct NotDominantError : Error {
    std::size_t index;
    explicit NotDominantError(std::size_t i)
        : Error("sequence is not non-increasing at position " + std::to_string(i)), index(i) {}
};

struct LengthMismatchError : Error {
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ZeroCentralParameterError : Error {
    ZeroCentralParameterError() : Error("central parameter x is zero; the form is not generic") {}
};

struct ZeroAlphaError : Error {
    ZeroAlphaError() : Error("alpha must be nonzero") {}
};

struct NotScalarLambdaError : Error {
    NotScalarLambdaError() : Error("lambda must have a single repeated value") {}
};

struct NotConvergedError : Error {
    int sweeps;
    explicit NotConvergedError(int s)
        : Error("eigensolver did not converge after " + std::to_string(s) + " sweeps"), sweeps(s) {}
};

struct DegeneratePhasesError : Error {
    DegeneratePhasesError() : Error("phase vector too degenerate for the character alternant") {}
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace orbitmult
