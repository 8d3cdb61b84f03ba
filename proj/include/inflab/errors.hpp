#pragma once

#include <stdexcept>
#include <string>

namespace inflab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid or array shape violates a precondition (too small, mismatched).
struct DimensionError : Error {
    using Error::Error;
};

/// Input data violates a mathematical precondition (sign, range, region).
struct DomainError : Error {
    using Error::Error;
};

/// A kernel or stencil cannot be resolved on the given mesh.
struct ResolutionError : Error {
    using Error::Error;
};

/// Root bracketing failed after the expansion cap.
struct BracketError : Error {
    using Error::Error;
};

/// Pseudo-time iteration diverged; message carries diagnostics.
struct DivergenceError : Error {
    using Error::Error;
};

/// Rate fit is under-determined or inconsistent.
struct FitError : Error {
    using Error::Error;
};

/// Config file or CLI input could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace inflab
