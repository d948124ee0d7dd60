#pragma once

#include <stdexcept>
#include <string>

namespace csalg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension or scalar-kind mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// An operation required a hermitian matrix and got something else.
struct NotHermitianError : Error {
    using Error::Error;
};

/// A precondition on argument values was violated.
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace csalg
