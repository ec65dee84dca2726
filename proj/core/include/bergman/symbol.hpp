#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/space.hpp"

namespace bergman {

/// A harmonic polynomial symbol on the disc,
///
///   phi(z) = sum_{j>=0} a_j conj(z)^j + sum_{j>=1} b_j z^j,
///
/// with finitely many nonzero coefficients. The constant term lives in
/// the anti-analytic list as a_0. Coefficient lists are kept trimmed:
/// `anti` never ends in a zero except for the always-present a_0 slot,
/// `analytic` never ends in a zero and may be empty.
class HarmonicSymbol {
public:
  /// The zero symbol: anti = {0}, analytic = {}.
  HarmonicSymbol();

  /// Builds a symbol from plain monomial coefficients. `anti[j]` is a_j
  /// (so anti[0] is the constant term); `analytic[i]` is b_{i+1}.
  /// Throws ValidationError on non-finite coefficients.
  static HarmonicSymbol from_coefficients(std::vector<Complex> anti,
                                          std::vector<Complex> analytic);

  /// Same lists, but interpreted against the orthonormal basis: entry j
  /// multiplies z^j / gamma_j (or conj(z)^j / gamma_j). Only
  /// non-negative basis indices are supported, which is why this is a
  /// conversion on input rather than a parallel representation.
  static HarmonicSymbol from_normalized(std::vector<Complex> anti,
                                        std::vector<Complex> analytic,
                                        double alpha);

  /// a_j, zero outside the stored range. j must be >= 0.
  Complex anti_coeff(int j) const;
  /// b_j, zero outside the stored range. j must be >= 1.
  Complex analytic_coeff(int j) const;

  /// Trimmed coefficient lists. anti()[j] is a_j; analytic()[i] is b_{i+1}.
  const std::vector<Complex>& anti() const noexcept { return anti_; }
  const std::vector<Complex>& analytic() const noexcept { return analytic_; }

  /// Largest j with a_j != 0 (0 for a pure-analytic or zero symbol).
  int anti_degree() const noexcept;
  /// Largest j with b_j != 0 (0 when there is no analytic part).
  int analytic_degree() const noexcept;

  bool is_zero() const noexcept;
  bool is_constant() const noexcept;
  /// No conj(z) terms apart from the constant.
  bool is_analytic() const noexcept;
  /// No z terms.
  bool is_anti_analytic() const noexcept;

  friend bool operator==(const HarmonicSymbol&,
                         const HarmonicSymbol&) = default;

private:
  std::vector<Complex> anti_;      // index j <-> a_j, size >= 1
  std::vector<Complex> analytic_;  // index i <-> b_{i+1}
};

/// Parses the canonical JSON form
///   {"anti": [[re,im], ...], "analytic": [[re,im], ...]}
/// where anti[j] is a_j and analytic[i] is b_{i+1}. Trailing zeros are
/// trimmed on input. Throws ParseError (with byte position when the
/// JSON itself is malformed) or ValidationError on non-finite values.
HarmonicSymbol parse_symbol(const std::string& text);

/// Canonical serialization: keys sorted, every coefficient emitted as a
/// [re, im] pair of shortest round-trip doubles, "anti" never empty.
/// parse_symbol(serialize_symbol(s)) == s exactly.
std::string serialize_symbol(const HarmonicSymbol& s);

/// If psi == c * phi for a single complex scalar c (comparing both
/// coefficient families), returns c; otherwise nullopt. The zero symbol
/// is dependent on everything with c = 0 when psi is zero, and nothing
/// nonzero is dependent on the zero symbol.
std::optional<Complex> linear_dependence(const HarmonicSymbol& phi,
                                         const HarmonicSymbol& psi);

enum class ExpKind { Analytic, AntiAnalytic };

/// Degree-d truncation of e^z (coefficients 1/j! on z^j) or of
/// e^conj(z) (on conj(z)^j). Standard figure and benchmark fixture.
HarmonicSymbol truncated_exponential(ExpKind kind, int degree);

}  // namespace bergman
