#pragma once

#include <vector>

#include "bergman/operators.hpp"

namespace bergman {

/// Eigenvalues of a truncation, sorted by (re, im), together with the
/// worst eigenpair residual max_i ||A v_i - lambda_i v_i||_2 over unit
/// eigenvectors. Dense non-symmetric solve: Hessenberg reduction plus
/// shifted QR with the standard 30 * dim iteration budget; throws
/// SolverError if the iteration does not converge.
struct SpectrumResult {
  std::vector<Complex> eigenvalues;
  double max_residual = 0.0;
};

SpectrumResult eigenvalues(const ComplexMatrix& m);
SpectrumResult eigenvalues(const OperatorMatrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);
std::vector<double> singular_values(const OperatorMatrix& m);

/// Largest singular value; the operator norm of the truncation.
double operator_norm(const ComplexMatrix& m);

/// Number of singular values strictly above the absolute threshold.
int numerical_rank(const ComplexMatrix& m, double tol);
int numerical_rank(const OperatorMatrix& m, double tol);

/// Coefficients of the truncated reproducing kernel at w (|w| < 1),
/// v_n = conj(w)^n / gamma_n for n < dim, scaled to unit norm.
Eigen::VectorXcd kernel_vector(Complex w, double alpha, int dim);

/// Norm of the truncated kernel before normalization; approaches
/// (1 - |w|^2)^{-(alpha+2)/2} as dim grows.
double kernel_norm(Complex w, double alpha, int dim);

/// ||(A - target I)^* v_w||_2 for the unit truncated kernel v_w. The
/// adjoint is the natural side: for an analytic symbol the kernel is an
/// eigenvector of the adjoint Toeplitz operator with eigenvalue
/// conj(phi(w)), so the residual vanishes as dim grows exactly when
/// target = phi(w).
double kernel_residual(const OperatorMatrix& m, Complex w, Complex target);

/// Rectangular grid [re0, re1] x [im0, im1] sampled at `steps` points
/// per axis (endpoints included; steps == 1 degenerates to re0/im0).
struct GridSpec {
  double re0 = -1.25;
  double re1 = 1.25;
  double im0 = -1.25;
  double im1 = 1.25;
  int steps = 101;

  void validate() const;
  std::vector<double> re_points() const;
  std::vector<double> im_points() const;
};

/// sigma(i, j) = smallest singular value of (A - lambda I) at
/// lambda = re_points[i] + i * im_points[j].
struct PseudospectrumGrid {
  GridSpec spec;
  std::vector<double> re;
  std::vector<double> im;
  Eigen::MatrixXd sigma;
};

/// One Schur reduction, then per grid point inverse iteration on
/// (T - lambda I)^* (T - lambda I) with two triangular solves per step
/// and a fixed start vector. Grid points are independent, so rows are
/// distributed across BERGMAN_WORKERS with bit-identical results for
/// any worker count. Exactly singular shifts report 0.
PseudospectrumGrid pseudospectrum(const OperatorMatrix& m,
                                  const GridSpec& grid);
PseudospectrumGrid pseudospectrum(const ComplexMatrix& m,
                                  const GridSpec& grid);

/// Exact sigma_min(A - lambda I) via SVD, for validating the iterative
/// path on small problems.
double min_singular_direct(const ComplexMatrix& m, Complex lambda);

/// Spectra of the same operator at several truncation dimensions, with
/// per-dimension summary statistics.
struct SweepEntry {
  int dim = 0;
  SpectrumResult spectrum;
  double max_modulus = 0.0;
  /// Fraction of eigenvalues with |lambda| < eps.
  double fraction_near_zero = 0.0;
};

std::vector<SweepEntry> truncation_sweep(
    OperatorKind kind, const std::optional<HarmonicSymbol>& symbol,
    const SpaceParams& base, const std::vector<int>& dims,
    Convention convention = Convention::Monomial, double eps = 1e-8);

}  // namespace bergman
