#include "bergman/operators.hpp"

#include <cmath>

#include "bergman/parallel.hpp"

namespace bergman {

namespace {

// Table-backed kernels shared by build_matrix. The standalone entry
// functions below evaluate the same expressions from log weights, so
// both paths produce identical doubles.

Complex toeplitz_kernel(int m, int n, const HarmonicSymbol& s,
                        const WeightTable& w) {
  if (n >= m) {
    Complex a = s.anti_coeff(n - m);
    return a == Complex(0.0, 0.0) ? a : w.ratio(n, m) * a;
  }
  Complex b = s.analytic_coeff(m - n);
  return b == Complex(0.0, 0.0) ? b : w.ratio(m, n) * b;
}

Complex hankel_kernel(int m, int n, const HarmonicSymbol& s,
                      const WeightTable& w) {
  Complex a = s.anti_coeff(n + m);
  if (a == Complex(0.0, 0.0)) return a;
  // grouping (log w_n + log w_m) keeps the entry bitwise symmetric in
  // (m, n), matching what the formula promises
  return std::exp(2.0 * w.log_weight(n + m) -
                  (w.log_weight(n) + w.log_weight(m))) *
         a;
}

Complex slant_toeplitz_kernel(int m, int n, const HarmonicSymbol& s, int k,
                              const WeightTable& w) {
  int km = k * m;
  if (n >= km) {
    Complex a = s.anti_coeff(n - km);
    if (a == Complex(0.0, 0.0)) return a;
    return std::exp(w.log_weight(m) + w.log_weight(n) -
                    2.0 * w.log_weight(km)) *
           a;
  }
  Complex b = s.analytic_coeff(km - n);
  return b == Complex(0.0, 0.0) ? b : w.ratio(m, n) * b;
}

Complex slant_hankel_kernel(int m, int n, const HarmonicSymbol& s, int k,
                            const WeightTable& w) {
  int km = k * m;
  Complex a = s.anti_coeff(n + km);
  if (a == Complex(0.0, 0.0)) return a;
  return std::exp(w.log_weight(m) + 2.0 * w.log_weight(n + km) -
                  w.log_weight(n) - 2.0 * w.log_weight(km)) *
         a;
}

int table_span(OperatorKind kind, const SpaceParams& p) {
  int top = p.dim - 1;
  switch (kind) {
    case OperatorKind::Toeplitz:
      return top;
    case OperatorKind::LittleHankel:
      return 2 * top;
    case OperatorKind::SlantShift:
    case OperatorKind::SlantShiftAdjoint:
    case OperatorKind::SlantToeplitz:
      return p.k * top;
    case OperatorKind::SlantLittleHankel:
      return (p.k + 1) * top;
  }
  throw DomainError("unknown operator kind");
}

}  // namespace

bool kind_requires_symbol(OperatorKind kind) {
  return kind != OperatorKind::SlantShift &&
         kind != OperatorKind::SlantShiftAdjoint;
}

std::string kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Toeplitz:
      return "toeplitz";
    case OperatorKind::LittleHankel:
      return "little-hankel";
    case OperatorKind::SlantShift:
      return "slant-shift";
    case OperatorKind::SlantShiftAdjoint:
      return "slant-shift-adjoint";
    case OperatorKind::SlantToeplitz:
      return "slant-toeplitz";
    case OperatorKind::SlantLittleHankel:
      return "slant-little-hankel";
  }
  throw DomainError("unknown operator kind");
}

OperatorKind kind_from_name(const std::string& name) {
  if (name == "toeplitz") return OperatorKind::Toeplitz;
  if (name == "little-hankel") return OperatorKind::LittleHankel;
  if (name == "slant-shift") return OperatorKind::SlantShift;
  if (name == "slant-shift-adjoint") return OperatorKind::SlantShiftAdjoint;
  if (name == "slant-toeplitz") return OperatorKind::SlantToeplitz;
  if (name == "slant-little-hankel") return OperatorKind::SlantLittleHankel;
  throw ParseError("unknown operator kind '" + name + "'");
}

std::string convention_name(Convention c) {
  return c == Convention::Monomial ? "monomial" : "normalized";
}

Convention convention_from_name(const std::string& name) {
  if (name == "monomial") return Convention::Monomial;
  if (name == "normalized") return Convention::Normalized;
  throw ParseError("unknown convention '" + name + "'");
}

Complex toeplitz_entry(int m, int n, const HarmonicSymbol& s, double alpha) {
  if (m < 0 || n < 0) throw DomainError("matrix indices must be >= 0");
  if (n >= m) {
    Complex a = s.anti_coeff(n - m);
    return a == Complex(0.0, 0.0) ? a : weight_ratio(n, m, alpha) * a;
  }
  Complex b = s.analytic_coeff(m - n);
  return b == Complex(0.0, 0.0) ? b : weight_ratio(m, n, alpha) * b;
}

Complex hankel_entry(int m, int n, const HarmonicSymbol& s, double alpha) {
  if (m < 0 || n < 0) throw DomainError("matrix indices must be >= 0");
  Complex a = s.anti_coeff(n + m);
  if (a == Complex(0.0, 0.0)) return a;
  return std::exp(2.0 * log_gamma_weight(n + m, alpha) -
                  (log_gamma_weight(n, alpha) + log_gamma_weight(m, alpha))) *
         a;
}

double slant_shift_entry(int m, int n, int k, double alpha, Convention conv) {
  if (m < 0 || n < 0) throw DomainError("matrix indices must be >= 0");
  if (k < 2) throw DomainError("slant order k must be >= 2");
  if (n != k * m) return 0.0;
  if (conv == Convention::Normalized) return 1.0;
  return weight_ratio(m, n, alpha);
}

Complex slant_toeplitz_entry(int m, int n, const HarmonicSymbol& s, int k,
                             double alpha) {
  if (m < 0 || n < 0) throw DomainError("matrix indices must be >= 0");
  if (k < 2) throw DomainError("slant order k must be >= 2");
  int km = k * m;
  if (n >= km) {
    Complex a = s.anti_coeff(n - km);
    if (a == Complex(0.0, 0.0)) return a;
    return std::exp(log_gamma_weight(m, alpha) + log_gamma_weight(n, alpha) -
                    2.0 * log_gamma_weight(km, alpha)) *
           a;
  }
  Complex b = s.analytic_coeff(km - n);
  return b == Complex(0.0, 0.0) ? b : weight_ratio(m, n, alpha) * b;
}

Complex slant_hankel_entry(int m, int n, const HarmonicSymbol& s, int k,
                           double alpha) {
  if (m < 0 || n < 0) throw DomainError("matrix indices must be >= 0");
  if (k < 2) throw DomainError("slant order k must be >= 2");
  int km = k * m;
  Complex a = s.anti_coeff(n + km);
  if (a == Complex(0.0, 0.0)) return a;
  return std::exp(log_gamma_weight(m, alpha) +
                  2.0 * log_gamma_weight(n + km, alpha) -
                  log_gamma_weight(n, alpha) -
                  2.0 * log_gamma_weight(km, alpha)) *
         a;
}

OperatorMatrix build_matrix(OperatorKind kind,
                            const std::optional<HarmonicSymbol>& symbol,
                            const SpaceParams& params, Convention convention) {
  params.validate();
  if (kind_requires_symbol(kind) && !symbol) {
    throw DomainError(kind_name(kind) + " requires a symbol");
  }
  if (!kind_requires_symbol(kind) && symbol) {
    throw DomainError(kind_name(kind) + " does not take a symbol");
  }

  const int n_dim = params.dim;
  const int k = params.k;
  WeightTable table(params.alpha, table_span(kind, params));

  OperatorMatrix out;
  out.kind = kind;
  out.params = params;
  out.convention = convention;
  out.symbol = symbol;
  out.entries = ComplexMatrix::Zero(n_dim, n_dim);

  if (kind == OperatorKind::SlantShift) {
    for (int m = 0; k * m < n_dim; ++m) {
      out.entries(m, k * m) =
          convention == Convention::Normalized ? 1.0 : table.ratio(m, k * m);
    }
    return out;
  }
  if (kind == OperatorKind::SlantShiftAdjoint) {
    for (int n = 0; k * n < n_dim; ++n) {
      out.entries(k * n, n) =
          convention == Convention::Normalized ? 1.0 : table.ratio(n, k * n);
    }
    return out;
  }

  const HarmonicSymbol& s = *symbol;
  // Under the normalized convention the compression step carries an
  // extra gamma_{km} / gamma_m relative to the monomial one; the
  // Toeplitz and little Hankel factors are unaffected.
  const bool slanted = kind == OperatorKind::SlantToeplitz ||
                       kind == OperatorKind::SlantLittleHankel;
  const bool renorm = slanted && convention == Convention::Normalized;

  parallel_chunks(n_dim, worker_count(), [&](int row_begin, int row_end) {
    for (int m = row_begin; m < row_end; ++m) {
      double row_scale =
          renorm ? std::exp(table.log_weight(k * m) - table.log_weight(m))
                 : 1.0;
      for (int n = 0; n < n_dim; ++n) {
        Complex v;
        switch (kind) {
          case OperatorKind::Toeplitz:
            v = toeplitz_kernel(m, n, s, table);
            break;
          case OperatorKind::LittleHankel:
            v = hankel_kernel(m, n, s, table);
            break;
          case OperatorKind::SlantToeplitz:
            v = slant_toeplitz_kernel(m, n, s, k, table);
            break;
          case OperatorKind::SlantLittleHankel:
            v = slant_hankel_kernel(m, n, s, k, table);
            break;
          default:
            v = Complex(0.0, 0.0);
        }
        if (renorm) v *= row_scale;
        out.entries(m, n) = v;
      }
    }
  });
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

}  // namespace bergman
