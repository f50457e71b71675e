#pragma once

#include <stdexcept>
#include <string>

namespace pspi {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or configuration value.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// File or format problem; message carries path and line where known.
class IoError : public Error {
public:
    using Error::Error;
};

/// Non-finite values or other numerical breakdown during computation.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace pspi
