#pragma once

#include <vector>

#include "bergman/space.hpp"

namespace bergman {

/// log of the normalizing weight gamma_n for the monomial z^n, i.e.
/// gamma_n = sqrt(Gamma(n+1) Gamma(alpha+2) / Gamma(n+alpha+2)), so that
/// {z^n / gamma_n} is orthonormal. Computed in the log domain; the direct
/// Gamma quotient overflows near n ~ 170.
double log_gamma_weight(int n, double alpha);

/// gamma_n itself. Strictly positive and strictly decreasing in n for
/// alpha > -1.
double gamma_weight(int n, double alpha);

/// gamma_p / gamma_q, formed from log weights so that large p, q stay
/// finite.
double weight_ratio(int p, int q, double alpha);

/// Coefficient of z^(s-t) in the orthogonal projection of conj(z)^t z^s
/// onto the analytic range: Gamma(s+1) Gamma(s-t+alpha+2) /
/// (Gamma(s+alpha+2) Gamma(s-t+1)) for s >= t, and 0 for s < t.
/// Equals (gamma_s / gamma_{s-t})^2.
double projection_coeff(int s, int t, double alpha);

/// gamma_m / gamma_{km}: the diagonal amplification of the slant shift
/// of order k. Tends to k^{(alpha+1)/2} as m grows.
double slant_ratio(int m, int k, double alpha);

/// Leading asymptotic form sqrt(Gamma(alpha+2)) * n^{-(alpha+1)/2} of
/// gamma_n; diagnostic only, never used to build operators.
double gamma_weight_asymptotic(int n, double alpha);

/// gamma_{kq} / gamma_q^2. Unbounded in q: useful as a numerical probe
/// of how normalized coefficients transform under slant compression.
double gamma_compression_ratio(int q, int k, double alpha);

/// Precomputed log weights for indices 0 .. max_index, shared by the
/// matrix builders so assembly does not call lgamma per entry.
class WeightTable {
public:
  WeightTable(double alpha, int max_index);

  double alpha() const noexcept { return alpha_; }
  int max_index() const noexcept { return static_cast<int>(log_.size()) - 1; }

  /// log gamma_n; n must lie in [0, max_index].
  double log_weight(int n) const;
  double weight(int n) const;
  /// gamma_p / gamma_q via one exp.
  double ratio(int p, int q) const;

private:
  double alpha_;
  std::vector<double> log_;
};

}  // namespace bergman
