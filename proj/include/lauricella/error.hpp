#pragma once

#include <stdexcept>
#include <string>

namespace lauricella {

/// Base of every error raised by this library. The CLI maps these to exit status 1.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gamma-function argument landed on a pole.
class pole_error : public error {
 public:
  using error::error;
};

/// Invalid parameter block (e.g. a lower parameter c that is a nonpositive integer).
class parameter_error : public error {
 public:
  using error::error;
};

/// Argument outside the region where the requested representation converges.
class domain_violation : public error {
 public:
  using error::error;
};

/// Index argument outside its admissible range.
class index_range_error : public error {
 public:
  using error::error;
};

/// Coincident points or insufficient distance from the singular hyperplanes.
class degenerate_geometry : public error {
 public:
  using error::error;
};

/// An internal combinatorial invariant failed during summation.
class diagnostic_error : public error {
 public:
  using error::error;
};

}  // namespace lauricella
