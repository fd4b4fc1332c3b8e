#pragma once

#include <stdexcept>
#include <string>

namespace decoplate {

// Base class for all library errors. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or schema-violating configuration (exit code 2).
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Non-physical value or illegal argument (exit code 3).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Arithmetic across incompatible dimension tags.
class DimensionError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Slit/screen geometry that cannot produce the requested observable.
class GeometryError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Model variant for which no closed form exists (e.g. absolute Joule power
// over an insulator-coated plate).
class UnsupportedModelError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Invariant violation or non-convergence during computation (exit code 4).
class NumericError : public Error {
  public:
    using Error::Error;
};

// Instance exceeds an enforced size guard (exit code 5).
class SizeError : public Error {
  public:
    using Error::Error;
};

inline int exit_code_for(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) return 2;
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const SizeError*>(&e) != nullptr) return 5;
    return 4;
}

} // namespace decoplate
