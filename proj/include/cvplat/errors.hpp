#pragma once

#include <stdexcept>
#include <string>

namespace cvplat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument to an operation (out-of-range k, empty input, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

// Vectors of different ambient dimension were mixed.
struct DimensionMismatch : InvalidParameter {
  using InvalidParameter::InvalidParameter;
};

// Odd, zero or otherwise unsupported norm index p.
struct UnsupportedNorm : InvalidParameter {
  using InvalidParameter::InvalidParameter;
};

// Work refused up front because it would exceed a configured budget.
struct ResourceLimit : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace cvplat
