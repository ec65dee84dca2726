#include "bergman/weights.hpp"

#include <cmath>
#include <string>

namespace bergman {

namespace {

void require_index(int n, const char* name) {
  if (n < 0) {
    throw DomainError(std::string(name) + " must be non-negative, got " +
                      std::to_string(n));
  }
}

void require_order(int k) {
  if (k < 2) {
    throw DomainError("slant order k must be >= 2, got " + std::to_string(k));
  }
}

}  // namespace

void validate_alpha(double alpha) {
  if (!(alpha > kAlphaMin) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and > -1, got " +
                      std::to_string(alpha));
  }
}

void SpaceParams::validate() const {
  validate_alpha(alpha);
  require_order(k);
  if (dim < 1) {
    throw DomainError("dim must be >= 1, got " + std::to_string(dim));
  }
}

double log_gamma_weight(int n, double alpha) {
  validate_alpha(alpha);
  require_index(n, "n");
  return 0.5 * (std::lgamma(n + 1.0) + std::lgamma(alpha + 2.0) -
                std::lgamma(n + alpha + 2.0));
}

double gamma_weight(int n, double alpha) {
  return std::exp(log_gamma_weight(n, alpha));
}

double weight_ratio(int p, int q, double alpha) {
  validate_alpha(alpha);
  require_index(p, "p");
  require_index(q, "q");
  return std::exp(log_gamma_weight(p, alpha) - log_gamma_weight(q, alpha));
}

double projection_coeff(int s, int t, double alpha) {
  validate_alpha(alpha);
  require_index(s, "s");
  require_index(t, "t");
  if (s < t) return 0.0;
  // (gamma_s / gamma_{s-t})^2 in log form.
  return std::exp(2.0 * (log_gamma_weight(s, alpha) -
                         log_gamma_weight(s - t, alpha)));
}

double slant_ratio(int m, int k, double alpha) {
  require_order(k);
  return weight_ratio(m, k * m, alpha);
}

double gamma_weight_asymptotic(int n, double alpha) {
  validate_alpha(alpha);
  if (n < 1) throw DomainError("asymptotic form needs n >= 1");
  return std::exp(0.5 * std::lgamma(alpha + 2.0)) *
         std::pow(static_cast<double>(n), -0.5 * (alpha + 1.0));
}

double gamma_compression_ratio(int q, int k, double alpha) {
  require_order(k);
  validate_alpha(alpha);
  require_index(q, "q");
  return std::exp(log_gamma_weight(k * q, alpha) -
                  2.0 * log_gamma_weight(q, alpha));
}

WeightTable::WeightTable(double alpha, int max_index) : alpha_(alpha) {
  validate_alpha(alpha);
  if (max_index < 0) throw DomainError("max_index must be >= 0");
  log_.resize(static_cast<size_t>(max_index) + 1);
  for (int n = 0; n <= max_index; ++n) log_[n] = log_gamma_weight(n, alpha);
}

double WeightTable::log_weight(int n) const {
  if (n < 0 || n >= static_cast<int>(log_.size())) {
    throw DomainError("weight index " + std::to_string(n) +
                      " outside table [0, " + std::to_string(max_index()) +
                      "]");
  }
  return log_[n];
}

double WeightTable::weight(int n) const { return std::exp(log_weight(n)); }

double WeightTable::ratio(int p, int q) const {
  return std::exp(log_weight(p) - log_weight(q));
}

}  // namespace bergman
