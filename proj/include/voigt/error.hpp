#pragma once

#include <stdexcept>
#include <string>

namespace voigt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable argument (NaN/Inf, y <= 0 where y > 0 is required).
class InputDomainError : public Error {
public:
    using Error::Error;
};

/// Invalid approximation parameters (M, N, h, depth, radius, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Argument sits on (or numerically at) a pole of a fixed-order approximation.
class PoleError : public Error {
public:
    using Error::Error;
};

class SplineError : public Error {
public:
    using Error::Error;
};

class ExtrapolationError : public SplineError {
public:
    using SplineError::SplineError;
};

/// Caller broke a documented contract (y below the bypass floor, y not a scalar).
class ContractError : public Error {
public:
    using Error::Error;
};

class InvalidOptionError : public Error {
public:
    using Error::Error;
};

class OracleDomainError : public Error {
public:
    using Error::Error;
};

}  // namespace voigt
