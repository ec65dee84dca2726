#include "bergman/analysis.hpp"

#include <cmath>

#include "bergman/spectral.hpp"
#include "bergman/weights.hpp"

namespace bergman {

CommutatorNorms commutator_norms(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DomainError("commutator needs square matrices of equal dimension");
  }
  ComplexMatrix c = a * b - b * a;
  CommutatorNorms out;
  out.operator_norm = operator_norm(c);
  out.frobenius = c.norm();
  return out;
}

CommutatorNorms commutator_norms(const OperatorMatrix& a,
                                 const OperatorMatrix& b) {
  return commutator_norms(a.entries, b.entries);
}

double self_commutator_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DomainError("self-commutator needs a non-empty square matrix");
  }
  ComplexMatrix c = a.adjoint() * a - a * a.adjoint();
  return operator_norm(c);
}

double self_commutator_defect(const OperatorMatrix& a) {
  return self_commutator_defect(a.entries);
}

std::vector<double> compactness_tail(const std::function<Complex(int)>& coeff,
                                     int k, double alpha, int j_max) {
  if (k < 2) throw DomainError("slant order k must be >= 2");
  validate_alpha(alpha);
  if (j_max < 0) throw DomainError("j_max must be >= 0");

  WeightTable table(alpha, j_max);
  std::vector<double> out(static_cast<size_t>(j_max) + 1, 0.0);
  for (int j = 0; j <= j_max; ++j) {
    double cj = std::abs(coeff(j));
    if (cj == 0.0) continue;
    double sup = 0.0;
    for (int m = 0; k * m <= j; ++m) {
      double v = std::exp(table.log_weight(m) + 2.0 * table.log_weight(j) -
                          table.log_weight(j - k * m) -
                          2.0 * table.log_weight(k * m));
      sup = std::max(sup, v);
    }
    out[j] = cj * sup;
  }
  return out;
}

std::vector<double> compactness_tail(const HarmonicSymbol& symbol, int k,
                                     double alpha, int j_max) {
  return compactness_tail(
      [&symbol](int j) { return symbol.anti_coeff(j); }, k, alpha, j_max);
}

long hankel_support_count(int anti_degree, int k, int n_dim) {
  if (anti_degree < 0) throw DomainError("anti_degree must be >= 0");
  if (k < 2) throw DomainError("slant order k must be >= 2");
  if (n_dim < 1) throw DomainError("n_dim must be >= 1");
  long count = 0;
  for (int m = 0; m < n_dim; ++m) {
    for (int n = 0; n < n_dim; ++n) {
      if (n + k * m <= anti_degree) ++count;
    }
  }
  return count;
}

double sparsity_ratio(const ComplexMatrix& m, double tol) {
  if (!(tol >= 0.0)) throw DomainError("sparsity tolerance must be >= 0");
  if (m.size() == 0) throw DomainError("sparsity of an empty matrix");
  long nnz = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > tol) ++nnz;
    }
  }
  return static_cast<double>(nnz) / static_cast<double>(m.size());
}

double sparsity_ratio(const OperatorMatrix& m, double tol) {
  return sparsity_ratio(m.entries, tol);
}

std::string axis_name(DecayAxis axis) {
  switch (axis) {
    case DecayAxis::Row:
      return "row";
    case DecayAxis::Column:
      return "column";
    case DecayAxis::SlantDiagonal:
      return "diagonal";
  }
  throw DomainError("unknown decay axis");
}

DecayAxis axis_from_name(const std::string& name) {
  if (name == "row") return DecayAxis::Row;
  if (name == "column") return DecayAxis::Column;
  if (name == "diagonal") return DecayAxis::SlantDiagonal;
  throw ParseError("unknown decay axis '" + name + "'");
}

std::vector<double> decay_profile(const OperatorMatrix& m, DecayAxis axis) {
  const int n_dim = m.dim();
  const int k = m.params.k;
  std::vector<double> out;

  switch (axis) {
    case DecayAxis::Row:
      out.assign(static_cast<size_t>(n_dim), 0.0);
      for (int i = 0; i < n_dim; ++i) {
        for (int j = 0; j < n_dim; ++j) {
          out[i] = std::max(out[i], std::abs(m.entries(i, j)));
        }
      }
      return out;
    case DecayAxis::Column:
      out.assign(static_cast<size_t>(n_dim), 0.0);
      for (int j = 0; j < n_dim; ++j) {
        for (int i = 0; i < n_dim; ++i) {
          out[j] = std::max(out[j], std::abs(m.entries(i, j)));
        }
      }
      return out;
    case DecayAxis::SlantDiagonal: {
      out.assign(static_cast<size_t>((n_dim - 1) * (k + 1)) + 1, 0.0);
      for (int i = 0; i < n_dim; ++i) {
        for (int j = 0; j < n_dim; ++j) {
          size_t d = static_cast<size_t>(j + k * i);
          out[d] = std::max(out[d], std::abs(m.entries(i, j)));
        }
      }
      while (!out.empty() && out.back() == 0.0) out.pop_back();
      return out;
    }
  }
  throw DomainError("unknown decay axis");
}

}  // namespace bergman
