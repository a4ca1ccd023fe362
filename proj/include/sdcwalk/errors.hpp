#pragma once

#include <stdexcept>
#include <string>

namespace sdcwalk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (non-Hermitian matrix, bad spinor, step mismatch, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotPsdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// sec(t*theta) diverges: the transfer matrix does not exist at this step.
class PoleError : public Error {
public:
    PoleError(const std::string& what, int step) : Error(what), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

// |cos(omega) sec(theta)| > 1, the diagonalizing frequency is complex.
class BandError : public Error {
public:
    using Error::Error;
};

// Requested evolution would exceed the configured site budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace sdcwalk
