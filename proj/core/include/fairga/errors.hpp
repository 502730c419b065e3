#pragma once

#include <stdexcept>

namespace fairga {

/// Base class of every exception the library throws on its own.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point was evaluated outside the objective's box.
struct OutOfBoundsError : Error {
    using Error::Error;
};

/// A gene vector had the wrong length for the operation.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Selection was invoked on an empty population.
struct EmptyPopulationError : Error {
    using Error::Error;
};

/// A member was added to a population already at capacity.
struct CapacityExceededError : Error {
    using Error::Error;
};

/// Resource-flow model parameters violate their invariants.
struct InvalidParamsError : Error {
    using Error::Error;
};

/// Raised by internal guards that must be unreachable, e.g. a discard pick
/// younger than the minimum lifetime. Indicates a bug, never bad input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace fairga
