#pragma once

#include <complex>

#include "bergman/errors.hpp"

namespace bergman {

using Complex = std::complex<double>;

/// Smallest admissible weight parameter. The space degenerates as
/// alpha -> -1, so values within 1e-9 of -1 are rejected.
inline constexpr double kAlphaMin = -1.0 + 1e-9;

/// Parameters of a truncated weighted Bergman space problem:
/// weight exponent alpha > -1, slant order k >= 2, truncation
/// dimension dim >= 1 (basis indices 0 .. dim-1).
struct SpaceParams {
  double alpha = 1.0;
  int k = 2;
  int dim = 15;

  /// Throws DomainError unless alpha > -1 (with guard band), k >= 2
  /// and dim >= 1.
  void validate() const;

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Validates a standalone alpha value (used by weight functions that
/// take alpha directly).
void validate_alpha(double alpha);

}  // namespace bergman
