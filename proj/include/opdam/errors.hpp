#pragma once

#include <stdexcept>
#include <string>

namespace opdam {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation at a pole of a Gamma factor or of the c-function.
struct PoleError : Error {
    using Error::Error;
};

/// A quadrature or series failed to reach the requested tolerance.
struct AccuracyError : Error {
    using Error::Error;
};

/// An argument lies outside the admissible domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A verification was handed an input it cannot form a verdict on (e.g. f = 0).
struct DegenerateInput : Error {
    using Error::Error;
};

/// The c-function constant fit had no usable samples.
struct FitError : Error {
    using Error::Error;
};

/// A corpus member failed its finiteness screen at generation time.
struct GenerationError : Error {
    using Error::Error;
};

}  // namespace opdam
