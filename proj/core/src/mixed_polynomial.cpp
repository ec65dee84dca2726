#include "bergman/mixed_polynomial.hpp"

#include <cmath>

namespace bergman {

MixedPolynomial MixedPolynomial::monomial(int p, int q, Complex coeff) {
  if (p < 0 || q < 0) throw DomainError("monomial exponents must be >= 0");
  MixedPolynomial m;
  m.add_term(p, q, coeff);
  return m;
}

MixedPolynomial MixedPolynomial::from_symbol(const HarmonicSymbol& s) {
  MixedPolynomial m;
  const auto& anti = s.anti();
  for (size_t j = 0; j < anti.size(); ++j) {
    m.add_term(0, static_cast<int>(j), anti[j]);
  }
  const auto& analytic = s.analytic();
  for (size_t i = 0; i < analytic.size(); ++i) {
    m.add_term(static_cast<int>(i) + 1, 0, analytic[i]);
  }
  return m;
}

void MixedPolynomial::add_term(int p, int q, Complex coeff) {
  if (p < 0 || q < 0) throw DomainError("term exponents must be >= 0");
  if (coeff == Complex(0.0, 0.0)) return;
  auto key = std::make_pair(p, q);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

Complex MixedPolynomial::coeff(int p, int q) const {
  auto it = terms_.find(std::make_pair(p, q));
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

bool MixedPolynomial::is_analytic() const noexcept {
  for (const auto& [pq, c] : terms_) {
    if (pq.second != 0) return false;
  }
  return true;
}

MixedPolynomial MixedPolynomial::operator+(const MixedPolynomial& rhs) const {
  MixedPolynomial out = *this;
  for (const auto& [pq, c] : rhs.terms_) out.add_term(pq.first, pq.second, c);
  return out;
}

MixedPolynomial MixedPolynomial::operator-(const MixedPolynomial& rhs) const {
  MixedPolynomial out = *this;
  for (const auto& [pq, c] : rhs.terms_) out.add_term(pq.first, pq.second, -c);
  return out;
}

MixedPolynomial MixedPolynomial::operator*(const MixedPolynomial& rhs) const {
  MixedPolynomial out;
  for (const auto& [pq1, c1] : terms_) {
    for (const auto& [pq2, c2] : rhs.terms_) {
      out.add_term(pq1.first + pq2.first, pq1.second + pq2.second, c1 * c2);
    }
  }
  return out;
}

MixedPolynomial MixedPolynomial::scaled(Complex c) const {
  MixedPolynomial out;
  for (const auto& [pq, v] : terms_) out.add_term(pq.first, pq.second, c * v);
  return out;
}

double MixedPolynomial::max_coeff_distance(const MixedPolynomial& rhs) const {
  double d = 0.0;
  for (const auto& [pq, c] : terms_) {
    d = std::max(d, std::abs(c - rhs.coeff(pq.first, pq.second)));
  }
  for (const auto& [pq, c] : rhs.terms_) {
    d = std::max(d, std::abs(coeff(pq.first, pq.second) - c));
  }
  return d;
}

}  // namespace bergman
