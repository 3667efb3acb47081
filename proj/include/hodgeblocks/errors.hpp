#pragma once

#include <stdexcept>
#include <string>

namespace hodgeblocks {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A user-supplied value violates one of the model hypotheses.
/// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct InvalidR : InputError {
    using InputError::InputError;
};

struct InvalidS : InputError {
    using InputError::InputError;
};

struct ColorOutOfRange : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

// The remaining errors signal an operation applied outside its domain or a
// broken internal invariant. The CLI maps these to exit code 1.

struct NotAMonomial : Error {
    using Error::Error;
};

struct NotAUnit : Error {
    using Error::Error;
};

struct ZeroSubstitution : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct NonMonomialNorm : Error {
    using Error::Error;
};

struct OutputColorUnsupported : Error {
    using Error::Error;
};

struct NonIntegerShift : Error {
    using Error::Error;
};

struct ZeroColorShift : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace hodgeblocks
