#pragma once

#include <stdexcept>
#include <string>

namespace facpoly {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unparsable rationals, violated preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Gamma-ratio evaluation hit a genuine singularity.
class PoleError : public Error {
public:
    using Error::Error;
};

// A truncated series was evaluated beyond its known coefficients.
class OrderError : public Error {
public:
    using Error::Error;
};

// Frobenius recurrence: I(c + k) vanished for some k >= 1.
class ResonanceError : public Error {
public:
    ResonanceError(const std::string& what, long k) : Error(what), k_(k) {}
    long k() const noexcept { return k_; }

private:
    long k_;
};

// Frobenius: the requested exponent is not a root of the indicial polynomial.
class NotARootError : public Error {
public:
    using Error::Error;
};

// Resolvent of a*P + (a + b) does not exist (a + b == 0).
class DivergentResolventError : public Error {
public:
    using Error::Error;
};

} // namespace facpoly
