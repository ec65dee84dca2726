#pragma once

#include <functional>
#include <vector>

#include "bergman/operators.hpp"

namespace bergman {

/// ||AB - BA|| in operator and Frobenius norms. Symmetric in its
/// arguments; throws DomainError on mismatched dimensions.
struct CommutatorNorms {
  double operator_norm = 0.0;
  double frobenius = 0.0;
};

CommutatorNorms commutator_norms(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
CommutatorNorms commutator_norms(const OperatorMatrix& a,
                                 const OperatorMatrix& b);

/// ||A*A - AA*|| in operator norm: zero exactly when the truncation is
/// normal. Truncation can break normality that holds in infinite
/// dimensions, so this is a diagnostic, not a verdict on the operator.
double self_commutator_defect(const ComplexMatrix& a);
double self_commutator_defect(const OperatorMatrix& a);

/// Compactness tail statistic for the slant little Hankel with
/// anti-analytic coefficients c_j: for each diagonal index j,
///
///   v_j = sup over m with k m <= j of
///         |c_j| gamma_m gamma_j^2 / (gamma_{j-km} gamma_{km}^2),
///
/// the largest entry magnitude the infinite matrix carries on diagonal
/// j. The operator is compact exactly when v_j -> 0. Returns
/// v_0 .. v_{j_max}.
std::vector<double> compactness_tail(const std::function<Complex(int)>& coeff,
                                     int k, double alpha, int j_max);
std::vector<double> compactness_tail(const HarmonicSymbol& symbol, int k,
                                     double alpha, int j_max);

/// Number of (m, n) positions with m, n < n_dim and n + k m <=
/// anti_degree: the support bound for a slant little Hankel truncation
/// whose symbol has the given anti-analytic degree. Counted by
/// enumeration.
long hankel_support_count(int anti_degree, int k, int n_dim);

/// Fraction of entries with |entry| > tol.
double sparsity_ratio(const ComplexMatrix& m, double tol);
double sparsity_ratio(const OperatorMatrix& m, double tol);

enum class DecayAxis { Row, Column, SlantDiagonal };

std::string axis_name(DecayAxis axis);
DecayAxis axis_from_name(const std::string& name);  // throws ParseError

/// Profile of entry magnitudes along an axis. Row: values[m] =
/// max_n |A(m, n)| (length dim). Column: values[n] = max_m |A(m, n)|
/// (length dim). SlantDiagonal: values[j] = max over n + k m == j
/// (length trimmed to the last nonzero, so a symbol of anti-degree P
/// yields at most P + 1 values).
std::vector<double> decay_profile(const OperatorMatrix& m, DecayAxis axis);

}  // namespace bergman
