#include "bergman/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bergman/parallel.hpp"
#include "bergman/weights.hpp"

namespace bergman {

SpectrumResult eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DomainError("eigenvalues need a non-empty square matrix");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, true);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigenvalue QR iteration did not converge");
  }

  SpectrumResult out;
  const int n = static_cast<int>(m.rows());
  out.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[i];
    Eigen::VectorXcd v = solver.eigenvectors().col(i);
    double r = (m * v - solver.eigenvalues()[i] * v).norm();
    out.max_residual = std::max(out.max_residual, r);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](Complex a, Complex b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return out;
}

SpectrumResult eigenvalues(const OperatorMatrix& m) {
  return eigenvalues(m.entries);
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw DomainError("singular_values need a non-empty matrix");
  }
  Eigen::VectorXd sv;
  if (m.rows() <= 64 && m.cols() <= 64) {
    sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  } else {
    sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  }
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> singular_values(const OperatorMatrix& m) {
  return singular_values(m.entries);
}

double operator_norm(const ComplexMatrix& m) {
  return singular_values(m).front();
}

int numerical_rank(const ComplexMatrix& m, double tol) {
  if (!(tol >= 0.0)) throw DomainError("rank tolerance must be >= 0");
  int rank = 0;
  for (double s : singular_values(m)) {
    if (s > tol) ++rank;
  }
  return rank;
}

int numerical_rank(const OperatorMatrix& m, double tol) {
  return numerical_rank(m.entries, tol);
}

Eigen::VectorXcd kernel_vector(Complex w, double alpha, int dim) {
  validate_alpha(alpha);
  if (dim < 1) throw DomainError("dim must be >= 1");
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("kernel point must satisfy |w| < 1");
  }
  Eigen::VectorXcd v(dim);
  Complex pw(1.0, 0.0);
  Complex cw = std::conj(w);
  for (int n = 0; n < dim; ++n) {
    v[n] = pw * std::exp(-log_gamma_weight(n, alpha));
    pw *= cw;
  }
  return v / v.norm();
}

double kernel_norm(Complex w, double alpha, int dim) {
  validate_alpha(alpha);
  if (dim < 1) throw DomainError("dim must be >= 1");
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("kernel point must satisfy |w| < 1");
  }
  double s = 0.0;
  double r2 = std::norm(w);
  double pw = 1.0;
  for (int n = 0; n < dim; ++n) {
    s += pw * std::exp(-2.0 * log_gamma_weight(n, alpha));
    pw *= r2;
  }
  return std::sqrt(s);
}

double kernel_residual(const OperatorMatrix& m, Complex w, Complex target) {
  Eigen::VectorXcd v = kernel_vector(w, m.params.alpha, m.dim());
  return (m.entries.adjoint() * v - std::conj(target) * v).norm();
}

namespace {

std::vector<double> axis_points(double lo, double hi, int steps) {
  std::vector<double> pts(static_cast<size_t>(steps));
  if (steps == 1) {
    pts[0] = lo;
    return pts;
  }
  double h = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) pts[i] = lo + h * i;
  return pts;
}

}  // namespace

void GridSpec::validate() const {
  if (steps < 1) throw DomainError("grid steps must be >= 1");
  if (!(re0 <= re1) || !(im0 <= im1)) {
    throw DomainError("grid bounds must satisfy re0 <= re1 and im0 <= im1");
  }
  if (!std::isfinite(re0) || !std::isfinite(re1) || !std::isfinite(im0) ||
      !std::isfinite(im1)) {
    throw DomainError("grid bounds must be finite");
  }
}

std::vector<double> GridSpec::re_points() const {
  return axis_points(re0, re1, steps);
}

std::vector<double> GridSpec::im_points() const {
  return axis_points(im0, im1, steps);
}

namespace {

// sigma_min of the shifted triangle held in `shifted` (diagonal already
// offset by lambda), by inverse iteration on the normal equations. Two
// triangular solves per step; fixed start vector keeps the result
// independent of scheduling.
double sigma_min_triangular(const Eigen::MatrixXcd& shifted) {
  const int n = static_cast<int>(shifted.rows());
  for (int i = 0; i < n; ++i) {
    if (shifted(i, i) == Complex(0.0, 0.0)) return 0.0;
  }
  auto upper = shifted.triangularView<Eigen::Upper>();
  auto lower = shifted.adjoint().triangularView<Eigen::Lower>();

  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(
      n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  double sigma = 0.0;
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXcd u = lower.solve(v);
    Eigen::VectorXcd z = upper.solve(u);
    double growth = z.norm();
    if (!std::isfinite(growth) || growth == 0.0) return 0.0;
    double next = 1.0 / std::sqrt(growth);
    v = z / growth;
    if (it > 2 && std::abs(next - sigma) <= 1e-10 * std::max(next, 1e-300)) {
      return next;
    }
    sigma = next;
  }
  return sigma;
}

}  // namespace

PseudospectrumGrid pseudospectrum(const ComplexMatrix& m,
                                  const GridSpec& grid) {
  grid.validate();
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DomainError("pseudospectrum needs a non-empty square matrix");
  }

  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m, /*computeU=*/false);
  if (schur.info() != Eigen::Success) {
    throw SolverError("Schur reduction did not converge");
  }
  const Eigen::MatrixXcd t = schur.matrixT();

  PseudospectrumGrid out;
  out.spec = grid;
  out.re = axis_points(grid.re0, grid.re1, grid.steps);
  out.im = axis_points(grid.im0, grid.im1, grid.steps);
  out.sigma.resize(grid.steps, grid.steps);

  parallel_chunks(grid.steps, worker_count(), [&](int begin, int end) {
    // one working copy per chunk; only the diagonal changes per point
    Eigen::MatrixXcd work = t;
    for (int i = begin; i < end; ++i) {
      for (int j = 0; j < grid.steps; ++j) {
        Complex lambda(out.re[i], out.im[j]);
        work.diagonal() = t.diagonal().array() - lambda;
        out.sigma(i, j) = sigma_min_triangular(work);
      }
    }
  });
  return out;
}

PseudospectrumGrid pseudospectrum(const OperatorMatrix& m,
                                  const GridSpec& grid) {
  return pseudospectrum(m.entries, grid);
}

double min_singular_direct(const ComplexMatrix& m, Complex lambda) {
  Eigen::MatrixXcd shifted = m;
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
  return svd.singularValues()[svd.singularValues().size() - 1];
}

std::vector<SweepEntry> truncation_sweep(
    OperatorKind kind, const std::optional<HarmonicSymbol>& symbol,
    const SpaceParams& base, const std::vector<int>& dims,
    Convention convention, double eps) {
  if (dims.empty()) throw DomainError("truncation sweep needs dimensions");
  std::vector<SweepEntry> out;
  out.reserve(dims.size());
  for (int d : dims) {
    SpaceParams p = base;
    p.dim = d;
    OperatorMatrix m = build_matrix(kind, symbol, p, convention);
    SweepEntry e;
    e.dim = d;
    e.spectrum = eigenvalues(m);
    int near = 0;
    for (Complex lam : e.spectrum.eigenvalues) {
      e.max_modulus = std::max(e.max_modulus, std::abs(lam));
      if (std::abs(lam) < eps) ++near;
    }
    e.fraction_near_zero = static_cast<double>(near) / d;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace bergman
