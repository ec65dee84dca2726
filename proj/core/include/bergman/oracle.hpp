#pragma once

#include "bergman/mixed_polynomial.hpp"
#include "bergman/operators.hpp"

namespace bergman {

/// Compositional route to the same operators as build_matrix: multiply
/// by the symbol, flip, project and compress on explicit mixed
/// polynomials, one definition step at a time, with no reference to the
/// closed-form entry expressions. Exists so the two routes can be
/// compared; keep it free of shortcuts.

/// Orthogonal projection onto the analytic part, termwise:
/// z^p conj(z)^q -> projection_coeff(p, q, alpha) * z^{p-q} for p >= q,
/// dropped otherwise.
MixedPolynomial bergman_project(const MixedPolynomial& f, double alpha);

/// The flip J: z^p conj(z)^q -> z^q conj(z)^p.
MixedPolynomial flip(const MixedPolynomial& f);

/// Slant compression W_k on analytic polynomials. Monomial: z^p ->
/// z^{p/k} when k | p, else dropped. Normalized: additionally scaled by
/// gamma_p / gamma_{p/k}. Throws DomainError on non-analytic input.
MixedPolynomial slant_compress(const MixedPolynomial& f, int k, double alpha,
                               Convention conv);

/// Adjoint W_k^* on analytic polynomials. Monomial: z^n ->
/// (gamma_n / gamma_{kn})^2 z^{kn}; Normalized: z^n ->
/// (gamma_n / gamma_{kn}) z^{kn}.
MixedPolynomial slant_expand(const MixedPolynomial& f, int k, double alpha,
                             Convention conv);

/// Applies the operator by composing the definition steps on `input`.
/// The symbol argument follows the same required/forbidden rule as
/// build_matrix.
MixedPolynomial oracle_apply(OperatorKind kind,
                             const std::optional<HarmonicSymbol>& symbol,
                             const SpaceParams& params, Convention convention,
                             const MixedPolynomial& input);

/// Truncated matrix assembled column by column from oracle_apply on the
/// orthonormal basis vectors. Same shape and metadata as build_matrix;
/// agreement between the two is a test concern, not assumed here.
OperatorMatrix oracle_matrix(OperatorKind kind,
                             const std::optional<HarmonicSymbol>& symbol,
                             const SpaceParams& params,
                             Convention convention = Convention::Monomial);

}  // namespace bergman
