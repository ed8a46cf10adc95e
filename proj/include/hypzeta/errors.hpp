#pragma once

#include <stdexcept>
#include <string>

namespace hz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed model file, invalid parameters. CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Numerical failures. CLI exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Frobenius series for the smaller root when the roots differ by a positive integer.
class LogCaseError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SmoothnessError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace hz
