#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "bergman/symbol.hpp"

namespace testutil {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Deterministic random harmonic symbols for property tests. Anti part
/// is always nonzero so that Hankel-type operators see the symbol.
class SymbolGen {
public:
  explicit SymbolGen(unsigned seed) : rng_(seed) {}

  bergman::Complex coeff() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng_), u(rng_)};
  }

  bergman::HarmonicSymbol symbol(int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int pa = deg(rng_);
    int pb = deg(rng_);
    std::vector<bergman::Complex> anti(static_cast<size_t>(pa) + 1);
    for (auto& c : anti) c = coeff();
    if (std::abs(anti[pa]) < 0.1) anti[pa] += bergman::Complex(0.5, 0.5);
    std::vector<bergman::Complex> analytic(static_cast<size_t>(pb));
    for (auto& c : analytic) c = coeff();
    return bergman::HarmonicSymbol::from_coefficients(anti, analytic);
  }

  std::mt19937& rng() { return rng_; }

private:
  std::mt19937 rng_;
};

inline bergman::HarmonicSymbol scaled_symbol(const bergman::HarmonicSymbol& s,
                                             bergman::Complex c) {
  std::vector<bergman::Complex> anti = s.anti();
  for (auto& v : anti) v *= c;
  std::vector<bergman::Complex> analytic = s.analytic();
  for (auto& v : analytic) v *= c;
  return bergman::HarmonicSymbol::from_coefficients(anti, analytic);
}

}  // namespace testutil
