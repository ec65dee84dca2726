#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "bergman/symbol.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// Row-major so that row-parallel assembly writes contiguous memory.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class OperatorKind {
  Toeplitz,           // T_phi = P (phi .)
  LittleHankel,       // h_phi = P J (phi .)
  SlantShift,         // W_k: z^n -> z^{n/k} when k | n, else 0
  SlantShiftAdjoint,  // W_k^*
  SlantToeplitz,      // B_phi = W_k T_phi
  SlantLittleHankel,  // S_phi = W_k h_phi
};

/// Weighting of the slant shift. Monomial acts on plain monomials
/// (z^{km} -> z^m, unbounded column norms); Normalized acts on the
/// orthonormal basis (e_{km} -> e_m, a partial isometry). The two
/// differ by the diagonal factor gamma_m / gamma_{km}.
enum class Convention { Monomial, Normalized };

/// True for kinds parameterized by a symbol (the two shifts are not).
bool kind_requires_symbol(OperatorKind kind);

/// Stable lowercase names used in files and on the command line:
/// toeplitz, little-hankel, slant-shift, slant-shift-adjoint,
/// slant-toeplitz, slant-little-hankel.
std::string kind_name(OperatorKind kind);
OperatorKind kind_from_name(const std::string& name);  // throws ParseError

std::string convention_name(Convention c);
Convention convention_from_name(const std::string& name);

/// Matrix entry <A e_n, e_m> of the operator compressed to
/// span{e_0 .. e_{dim-1}}. All formulas below are exact in the weights;
/// the only floating-point work is one exp of a log-weight difference
/// times a symbol coefficient.

/// Toeplitz: (gamma_n / gamma_m) a_{n-m} for n >= m,
///           (gamma_m / gamma_n) b_{m-n} for n <  m.
Complex toeplitz_entry(int m, int n, const HarmonicSymbol& s, double alpha);

/// Little Hankel: (gamma_{n+m}^2 / (gamma_n gamma_m)) a_{n+m}. Only the
/// anti-analytic part of the symbol survives.
Complex hankel_entry(int m, int n, const HarmonicSymbol& s, double alpha);

/// Slant shift of order k: nonzero only at n = k m, value
/// gamma_m / gamma_{km} (Monomial) or 1 (Normalized).
double slant_shift_entry(int m, int n, int k, double alpha, Convention conv);

/// Slant Toeplitz: (gamma_m gamma_n / gamma_{km}^2) a_{n-km} for n >= km,
///                 (gamma_m / gamma_n) b_{km-n}       for n <  km.
Complex slant_toeplitz_entry(int m, int n, const HarmonicSymbol& s, int k,
                             double alpha);

/// Slant little Hankel:
///   (gamma_m gamma_{n+km}^2 / (gamma_n gamma_{km}^2)) a_{n+km}.
Complex slant_hankel_entry(int m, int n, const HarmonicSymbol& s, int k,
                           double alpha);

/// A built truncation together with everything needed to rebuild it.
struct OperatorMatrix {
  OperatorKind kind;
  SpaceParams params;
  Convention convention = Convention::Monomial;
  std::optional<HarmonicSymbol> symbol;  // engaged iff the kind needs one
  ComplexMatrix entries;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
};

/// Assembles the dim x dim truncation from the closed-form entries.
/// Rows are filled in parallel (BERGMAN_WORKERS); every entry is
/// computed by the same scalar expression regardless of worker count,
/// so the result is bit-identical across worker counts. Throws
/// DomainError when a symbol is missing/superfluous for the kind or
/// params are invalid.
OperatorMatrix build_matrix(OperatorKind kind,
                            const std::optional<HarmonicSymbol>& symbol,
                            const SpaceParams& params,
                            Convention convention = Convention::Monomial);

/// Conjugate-transpose companion with the same metadata.
ComplexMatrix adjoint(const ComplexMatrix& m);

}  // namespace bergman
