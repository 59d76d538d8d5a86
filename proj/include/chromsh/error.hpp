#pragma once

#include <stdexcept>
#include <string>

namespace chromsh {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unknown vertex ids, bad weights, parse failures.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured size bound (degree, edge count) was exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

/// An internal identity that must hold exactly did not (d^2 != 0, a failed
/// chain-map commutation, a non-integral multiplicity, ...). Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace chromsh
