#include "bergman/oracle.hpp"

#include <cmath>

#include "bergman/parallel.hpp"
#include "bergman/weights.hpp"

namespace bergman {

MixedPolynomial bergman_project(const MixedPolynomial& f, double alpha) {
  validate_alpha(alpha);
  MixedPolynomial out;
  for (const auto& [pq, c] : f.terms()) {
    const auto [p, q] = pq;
    if (p < q) continue;
    out.add_term(p - q, 0, projection_coeff(p, q, alpha) * c);
  }
  return out;
}

MixedPolynomial flip(const MixedPolynomial& f) {
  MixedPolynomial out;
  for (const auto& [pq, c] : f.terms()) {
    out.add_term(pq.second, pq.first, c);
  }
  return out;
}

namespace {

void require_analytic(const MixedPolynomial& f, const char* op) {
  if (!f.is_analytic()) {
    throw DomainError(std::string(op) +
                      " is defined on analytic polynomials only");
  }
}

}  // namespace

MixedPolynomial slant_compress(const MixedPolynomial& f, int k, double alpha,
                               Convention conv) {
  if (k < 2) throw DomainError("slant order k must be >= 2");
  require_analytic(f, "slant_compress");
  MixedPolynomial out;
  for (const auto& [pq, c] : f.terms()) {
    const int p = pq.first;
    if (p % k != 0) continue;
    Complex v = c;
    if (conv == Convention::Normalized) {
      v *= std::exp(log_gamma_weight(p, alpha) -
                    log_gamma_weight(p / k, alpha));
    }
    out.add_term(p / k, 0, v);
  }
  return out;
}

MixedPolynomial slant_expand(const MixedPolynomial& f, int k, double alpha,
                             Convention conv) {
  if (k < 2) throw DomainError("slant order k must be >= 2");
  require_analytic(f, "slant_expand");
  MixedPolynomial out;
  for (const auto& [pq, c] : f.terms()) {
    const int n = pq.first;
    double scale = conv == Convention::Normalized ? 1.0 : 2.0;
    out.add_term(k * n, 0,
                 std::exp(scale * (log_gamma_weight(n, alpha) -
                                   log_gamma_weight(k * n, alpha))) *
                     c);
  }
  return out;
}

MixedPolynomial oracle_apply(OperatorKind kind,
                             const std::optional<HarmonicSymbol>& symbol,
                             const SpaceParams& params, Convention convention,
                             const MixedPolynomial& input) {
  params.validate();
  if (kind_requires_symbol(kind) && !symbol) {
    throw DomainError(kind_name(kind) + " requires a symbol");
  }
  if (!kind_requires_symbol(kind) && symbol) {
    throw DomainError(kind_name(kind) + " does not take a symbol");
  }

  switch (kind) {
    case OperatorKind::SlantShift:
      return slant_compress(input, params.k, params.alpha, convention);
    case OperatorKind::SlantShiftAdjoint:
      return slant_expand(input, params.k, params.alpha, convention);
    default:
      break;
  }

  MixedPolynomial product = MixedPolynomial::from_symbol(*symbol) * input;
  switch (kind) {
    case OperatorKind::Toeplitz:
      return bergman_project(product, params.alpha);
    case OperatorKind::LittleHankel:
      return bergman_project(flip(product), params.alpha);
    case OperatorKind::SlantToeplitz:
      return slant_compress(bergman_project(product, params.alpha), params.k,
                            params.alpha, convention);
    case OperatorKind::SlantLittleHankel:
      return slant_compress(bergman_project(flip(product), params.alpha),
                            params.k, params.alpha, convention);
    default:
      throw DomainError("unknown operator kind");
  }
}

OperatorMatrix oracle_matrix(OperatorKind kind,
                             const std::optional<HarmonicSymbol>& symbol,
                             const SpaceParams& params, Convention convention) {
  params.validate();
  const int n_dim = params.dim;

  OperatorMatrix out;
  out.kind = kind;
  out.params = params;
  out.convention = convention;
  out.symbol = symbol;
  out.entries = ComplexMatrix::Zero(n_dim, n_dim);

  parallel_chunks(n_dim, worker_count(), [&](int col_begin, int col_end) {
    for (int n = col_begin; n < col_end; ++n) {
      // image of e_n = z^n / gamma_n
      MixedPolynomial basis = MixedPolynomial::monomial(
          n, 0, std::exp(-log_gamma_weight(n, params.alpha)));
      MixedPolynomial image =
          oracle_apply(kind, symbol, params, convention, basis);
      // <image, e_m> = coeff_m * gamma_m
      for (const auto& [pq, c] : image.terms()) {
        const int m = pq.first;
        if (m < n_dim) {
          out.entries(m, n) =
              c * std::exp(log_gamma_weight(m, params.alpha));
        }
      }
    }
  });
  return out;
}

}  // namespace bergman
