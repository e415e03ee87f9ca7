#pragma once

#include <stdexcept>
#include <string>

namespace frnet {

/// Base of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed models or inputs that make an equation underivable.
struct DerivationError : Error {
    using Error::Error;
};

/// Failures of the numerical machinery (divergence, blowup, branch loss).
struct NumericError : Error {
    using Error::Error;
};

}  // namespace frnet
