#include "bergman/symbol.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "bergman/weights.hpp"

namespace bergman {

namespace {

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void check_finite(const std::vector<Complex>& v, const char* which) {
  for (size_t j = 0; j < v.size(); ++j) {
    if (!finite(v[j])) {
      throw ValidationError(std::string("non-finite ") + which +
                            " coefficient at index " + std::to_string(j));
    }
  }
}

void trim_trailing_zeros(std::vector<Complex>& v, size_t min_size) {
  while (v.size() > min_size && v.back() == Complex(0.0, 0.0)) v.pop_back();
}

nlohmann::json pair_list(const std::vector<Complex>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& c : v) {
    arr.push_back(nlohmann::json::array({c.real(), c.imag()}));
  }
  return arr;
}

std::vector<Complex> read_pair_list(const nlohmann::json& arr,
                                    const char* which) {
  if (!arr.is_array()) {
    throw ParseError(std::string("field '") + which +
                     "' must be a list of [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (size_t j = 0; j < arr.size(); ++j) {
    const auto& e = arr[j];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw ParseError(std::string("entry ") + std::to_string(j) + " of '" +
                       which + "' is not a [re, im] pair");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

HarmonicSymbol::HarmonicSymbol() : anti_(1, Complex(0.0, 0.0)) {}

HarmonicSymbol HarmonicSymbol::from_coefficients(
    std::vector<Complex> anti, std::vector<Complex> analytic) {
  check_finite(anti, "anti");
  check_finite(analytic, "analytic");
  HarmonicSymbol s;
  s.anti_ = std::move(anti);
  if (s.anti_.empty()) s.anti_.push_back(Complex(0.0, 0.0));
  s.analytic_ = std::move(analytic);
  trim_trailing_zeros(s.anti_, 1);
  trim_trailing_zeros(s.analytic_, 0);
  return s;
}

HarmonicSymbol HarmonicSymbol::from_normalized(std::vector<Complex> anti,
                                               std::vector<Complex> analytic,
                                               double alpha) {
  validate_alpha(alpha);
  // Entry j scales the unit vector z^j / gamma_j, so the plain monomial
  // coefficient is the entry divided by gamma_j.
  for (size_t j = 0; j < anti.size(); ++j) {
    anti[j] /= gamma_weight(static_cast<int>(j), alpha);
  }
  for (size_t i = 0; i < analytic.size(); ++i) {
    analytic[i] /= gamma_weight(static_cast<int>(i) + 1, alpha);
  }
  return from_coefficients(std::move(anti), std::move(analytic));
}

Complex HarmonicSymbol::anti_coeff(int j) const {
  if (j < 0) throw DomainError("anti coefficient index must be >= 0");
  if (j >= static_cast<int>(anti_.size())) return Complex(0.0, 0.0);
  return anti_[j];
}

Complex HarmonicSymbol::analytic_coeff(int j) const {
  if (j < 1) throw DomainError("analytic coefficient index must be >= 1");
  if (j > static_cast<int>(analytic_.size())) return Complex(0.0, 0.0);
  return analytic_[j - 1];
}

int HarmonicSymbol::anti_degree() const noexcept {
  for (int j = static_cast<int>(anti_.size()) - 1; j >= 0; --j) {
    if (anti_[j] != Complex(0.0, 0.0)) return j;
  }
  return 0;
}

int HarmonicSymbol::analytic_degree() const noexcept {
  return static_cast<int>(analytic_.size());
}

bool HarmonicSymbol::is_zero() const noexcept {
  return analytic_.empty() && anti_.size() == 1 &&
         anti_[0] == Complex(0.0, 0.0);
}

bool HarmonicSymbol::is_constant() const noexcept {
  return analytic_.empty() && anti_.size() == 1;
}

bool HarmonicSymbol::is_analytic() const noexcept {
  return anti_.size() == 1;  // only the constant slot
}

bool HarmonicSymbol::is_anti_analytic() const noexcept {
  return analytic_.empty();
}

HarmonicSymbol parse_symbol(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<long>(e.byte));
  }
  if (!doc.is_object() || !doc.contains("anti") || !doc.contains("analytic")) {
    throw ParseError("symbol must be an object with 'anti' and 'analytic'");
  }
  return HarmonicSymbol::from_coefficients(
      read_pair_list(doc["anti"], "anti"),
      read_pair_list(doc["analytic"], "analytic"));
}

std::string serialize_symbol(const HarmonicSymbol& s) {
  // nlohmann objects iterate in key order, and doubles print in their
  // shortest round-trip form, so this dump is canonical byte for byte.
  nlohmann::json doc;
  doc["analytic"] = pair_list(s.analytic());
  doc["anti"] = pair_list(s.anti());
  return doc.dump();
}

std::optional<Complex> linear_dependence(const HarmonicSymbol& phi,
                                         const HarmonicSymbol& psi) {
  if (psi.is_zero()) return Complex(0.0, 0.0);
  if (phi.is_zero()) return std::nullopt;

  std::optional<Complex> scale;
  auto account = [&](Complex p, Complex q) -> bool {
    // q must equal scale * p for one global scale.
    if (p == Complex(0.0, 0.0)) return q == Complex(0.0, 0.0);
    Complex c = q / p;
    if (!scale) {
      scale = c;
      return true;
    }
    return std::abs(c - *scale) <= 1e-12 * std::max(1.0, std::abs(*scale));
  };

  int pa = std::max(static_cast<int>(phi.anti().size()),
                    static_cast<int>(psi.anti().size()));
  for (int j = 0; j < pa; ++j) {
    if (!account(phi.anti_coeff(j), psi.anti_coeff(j))) return std::nullopt;
  }
  int pb = std::max(phi.analytic_degree(), psi.analytic_degree());
  for (int j = 1; j <= pb; ++j) {
    if (!account(phi.analytic_coeff(j), psi.analytic_coeff(j))) {
      return std::nullopt;
    }
  }
  return scale;  // psi nonzero guarantees some coefficient fixed it
}

HarmonicSymbol truncated_exponential(ExpKind kind, int degree) {
  if (degree < 0) throw DomainError("truncation degree must be >= 0");
  std::vector<Complex> coeffs(static_cast<size_t>(degree) + 1);
  double f = 1.0;
  coeffs[0] = Complex(1.0, 0.0);
  for (int j = 1; j <= degree; ++j) {
    f /= j;
    coeffs[j] = Complex(f, 0.0);
  }
  if (kind == ExpKind::AntiAnalytic) {
    return HarmonicSymbol::from_coefficients(std::move(coeffs), {});
  }
  // constant term stays in the anti list's a_0 slot
  std::vector<Complex> analytic(coeffs.begin() + 1, coeffs.end());
  return HarmonicSymbol::from_coefficients({coeffs[0]}, std::move(analytic));
}

}  // namespace bergman
