#pragma once

#include <map>
#include <utility>

#include "bergman/symbol.hpp"

namespace bergman {

/// Finite linear combination of mixed monomials z^p conj(z)^q, the
/// working representation of the compositional oracle. Multiplication
/// is exact exponent bookkeeping; no basis or weight enters until a
/// projection or compression is applied. Exact zero coefficients are
/// dropped so term iteration always sees support only.
class MixedPolynomial {
public:
  /// (p, q) -> coefficient of z^p conj(z)^q, ordered lexicographically.
  using TermMap = std::map<std::pair<int, int>, Complex>;

  MixedPolynomial() = default;

  static MixedPolynomial monomial(int p, int q, Complex coeff = 1.0);
  /// a_j -> term (0, j), b_j -> term (j, 0).
  static MixedPolynomial from_symbol(const HarmonicSymbol& s);

  void add_term(int p, int q, Complex coeff);
  Complex coeff(int p, int q) const;
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True when no term carries a conj(z) factor.
  bool is_analytic() const noexcept;

  MixedPolynomial operator+(const MixedPolynomial& rhs) const;
  MixedPolynomial operator-(const MixedPolynomial& rhs) const;
  MixedPolynomial operator*(const MixedPolynomial& rhs) const;
  MixedPolynomial scaled(Complex c) const;

  /// max |coefficient difference|, for oracle comparisons.
  double max_coeff_distance(const MixedPolynomial& rhs) const;

  friend bool operator==(const MixedPolynomial&,
                         const MixedPolynomial&) = default;

private:
  TermMap terms_;
};

}  // namespace bergman
