#pragma once

#include <stdexcept>
#include <string>

namespace bladewatch {

// Each category maps to a distinct CLI exit code (see tools/bladewatch.cpp).

/// Invalid configuration or arguments (exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable, malformed or insufficient data (exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factorization failure or other numerical breakdown (exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bladewatch
