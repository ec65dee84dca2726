#include <cstdlib>
#include <cstring>
#include <doctest.h>

#include "bergman/mixed_polynomial.hpp"
#include "bergman/operators.hpp"

#include "helpers.hpp"

using namespace bergman;

namespace {

const HarmonicSymbol kZbar =
    HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {});
const HarmonicSymbol kZ = HarmonicSymbol::from_coefficients({{0, 0}}, {{1, 0}});
const HarmonicSymbol kZbarPlusZ =
    HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {{1, 0}});
const HarmonicSymbol kZbar2 =
    HarmonicSymbol::from_coefficients({{0, 0}, {0, 0}, {1, 0}}, {});

SpaceParams params(double alpha, int k, int dim) {
  SpaceParams p;
  p.alpha = alpha;
  p.k = k;
  p.dim = dim;
  return p;
}

}  // namespace

TEST_CASE("toeplitz entries, alpha=1, symbol z + conj(z)") {
  // gamma_1 = 1/sqrt(3), gamma_2/gamma_1 = 1/sqrt(2), gamma_3/gamma_2
  // = sqrt(3/5)
  CHECK(toeplitz_entry(1, 0, kZbarPlusZ, 1.0).real() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-14));
  CHECK(toeplitz_entry(0, 1, kZbarPlusZ, 1.0).real() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-14));
  CHECK(toeplitz_entry(2, 1, kZbarPlusZ, 1.0).real() ==
        doctest::Approx(0.7071067811865476).epsilon(1e-14));
  CHECK(toeplitz_entry(3, 2, kZbarPlusZ, 1.0).real() ==
        doctest::Approx(0.7745966692414834).epsilon(1e-14));
  // off the two relevant diagonals everything vanishes
  CHECK(toeplitz_entry(0, 2, kZbarPlusZ, 1.0) == Complex(0, 0));
  CHECK(toeplitz_entry(3, 0, kZbarPlusZ, 1.0) == Complex(0, 0));
  CHECK(toeplitz_entry(2, 2, kZbarPlusZ, 1.0) == Complex(0, 0));
}

TEST_CASE("little hankel entries, alpha=1, symbol conj(z)^2") {
  // entries live on the anti-diagonal n + m = 2
  CHECK(hankel_entry(1, 1, kZbar2, 1.0).real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hankel_entry(0, 2, kZbar2, 1.0).real() ==
        doctest::Approx(0.4082482904638631).epsilon(1e-14));
  CHECK(hankel_entry(2, 0, kZbar2, 1.0).real() ==
        doctest::Approx(0.4082482904638631).epsilon(1e-14));
  CHECK(hankel_entry(2, 2, kZbar2, 1.0) == Complex(0, 0));
  // analytic symbols are invisible to the little Hankel
  CHECK(hankel_entry(1, 1, kZ, 1.0) == Complex(0, 0));
  CHECK(hankel_entry(0, 0, kZ, 1.0) == Complex(0, 0));
}

TEST_CASE("little hankel matrix is symmetric, never Hermitian by accident") {
  testutil::SymbolGen gen(5);
  for (double alpha : {0.0, 1.0, 2.5}) {
    HarmonicSymbol s = gen.symbol(5);
    OperatorMatrix h =
        build_matrix(OperatorKind::LittleHankel, s, params(alpha, 2, 12));
    for (int m = 0; m < 12; ++m) {
      for (int n = 0; n < 12; ++n) {
        CHECK(h.entries(m, n) == h.entries(n, m));
      }
    }
  }
}

TEST_CASE("slant shift entries") {
  CHECK(slant_shift_entry(0, 0, 2, 1.0, Convention::Monomial) == 1.0);
  CHECK(slant_shift_entry(1, 2, 2, 1.0, Convention::Monomial) ==
        doctest::Approx(weight_ratio(1, 2, 1.0)).epsilon(1e-15));
  CHECK(slant_shift_entry(2, 4, 2, 1.0, Convention::Monomial) > 1.0);
  CHECK(slant_shift_entry(1, 3, 2, 1.0, Convention::Monomial) == 0.0);
  CHECK(slant_shift_entry(3, 5, 2, 1.0, Convention::Monomial) == 0.0);
  CHECK(slant_shift_entry(1, 2, 2, 1.0, Convention::Normalized) == 1.0);
  CHECK(slant_shift_entry(2, 6, 3, 0.5, Convention::Normalized) == 1.0);
  CHECK(slant_shift_entry(2, 5, 3, 0.5, Convention::Normalized) == 0.0);
}

TEST_CASE("slant toeplitz entries, alpha=1, k=2") {
  CHECK(slant_toeplitz_entry(0, 1, kZbarPlusZ, 2, 1.0).real() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-14));
  CHECK(slant_toeplitz_entry(1, 1, kZbarPlusZ, 2, 1.0).real() ==
        doctest::Approx(1.0).epsilon(1e-14));
  // gamma_1 gamma_3 / gamma_2^2 = sqrt(1/3) sqrt(1/10) * 6
  CHECK(slant_toeplitz_entry(1, 3, kZbarPlusZ, 2, 1.0).real() ==
        doctest::Approx(1.0954451150103324).epsilon(1e-13));
  CHECK(slant_toeplitz_entry(2, 3, kZbarPlusZ, 2, 1.0).real() ==
        doctest::Approx(1.2909944487358056).epsilon(1e-13));
  CHECK(slant_toeplitz_entry(0, 2, kZbarPlusZ, 2, 1.0) == Complex(0, 0));
  CHECK(slant_toeplitz_entry(2, 2, kZbarPlusZ, 2, 1.0) == Complex(0, 0));
}

TEST_CASE("slant little hankel entries, alpha=1, k=2") {
  // symbol conj(z)^2: support is n + 2m = 2
  CHECK(slant_hankel_entry(0, 2, kZbar2, 2, 1.0).real() ==
        doctest::Approx(0.4082482904638631).epsilon(1e-14));
  // (1, 0): gamma_1 gamma_2^2 / (gamma_0 gamma_2^2) = gamma_1
  CHECK(slant_hankel_entry(1, 0, kZbar2, 2, 1.0).real() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-13));
  CHECK(slant_hankel_entry(1, 1, kZbar2, 2, 1.0) == Complex(0, 0));
  CHECK(slant_hankel_entry(2, 0, kZbar2, 2, 1.0) == Complex(0, 0));
  CHECK(slant_hankel_entry(0, 0, kZbar2, 2, 1.0) == Complex(0, 0));
}

TEST_CASE("closed form for alpha=1, k=2 slant little hankel") {
  // With a_{n+2m} = 1 the entry reduces to
  // (2m+1)(2m+2) / ((n+2m+1)(n+2m+2)) * sqrt((n+1)(n+2) / ((m+1)(m+2))).
  double worst = 0.0;
  for (int m = 0; m <= 64; ++m) {
    for (int n = 0; n <= 64; ++n) {
      std::vector<Complex> anti(static_cast<size_t>(n + 2 * m) + 1);
      anti[n + 2 * m] = Complex(1, 0);
      HarmonicSymbol s = HarmonicSymbol::from_coefficients(anti, {});
      double got = slant_hankel_entry(m, n, s, 2, 1.0).real();
      double mm = m, nn = n;
      double want = (2 * mm + 1) * (2 * mm + 2) /
                    ((nn + 2 * mm + 1) * (nn + 2 * mm + 2)) *
                    std::sqrt((nn + 1) * (nn + 2) / ((mm + 1) * (mm + 2)));
      worst = std::max(worst, std::abs(got - want) / want);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("build_matrix shapes, metadata, symbol rules") {
  OperatorMatrix t =
      build_matrix(OperatorKind::Toeplitz, kZ, params(0.5, 3, 7));
  CHECK(t.dim() == 7);
  CHECK(t.kind == OperatorKind::Toeplitz);
  CHECK(t.params.alpha == 0.5);
  CHECK(t.params.k == 3);
  CHECK(t.convention == Convention::Monomial);
  REQUIRE(t.symbol.has_value());
  CHECK(*t.symbol == kZ);

  OperatorMatrix w =
      build_matrix(OperatorKind::SlantShift, std::nullopt, params(1, 2, 6));
  CHECK_FALSE(w.symbol.has_value());

  CHECK_THROWS_AS(
      (void)build_matrix(OperatorKind::Toeplitz, std::nullopt, params(1, 2, 4)),
      DomainError);
  CHECK_THROWS_AS(
      (void)build_matrix(OperatorKind::SlantShift, kZ, params(1, 2, 4)),
      DomainError);
  SpaceParams bad = params(1, 2, 4);
  bad.alpha = -3;
  CHECK_THROWS_AS((void)build_matrix(OperatorKind::Toeplitz, kZ, bad),
                  DomainError);
}

TEST_CASE("build_matrix agrees with the entry functions") {
  testutil::SymbolGen gen(7);
  HarmonicSymbol s = gen.symbol(4);
  SpaceParams p = params(1.5, 2, 12);
  OperatorMatrix t = build_matrix(OperatorKind::Toeplitz, s, p);
  OperatorMatrix h = build_matrix(OperatorKind::LittleHankel, s, p);
  OperatorMatrix b = build_matrix(OperatorKind::SlantToeplitz, s, p);
  OperatorMatrix sh = build_matrix(OperatorKind::SlantLittleHankel, s, p);
  OperatorMatrix w = build_matrix(OperatorKind::SlantShift, std::nullopt, p);
  for (int m = 0; m < 12; ++m) {
    for (int n = 0; n < 12; ++n) {
      CHECK(std::abs(t.entries(m, n) - toeplitz_entry(m, n, s, 1.5)) <=
            1e-15);
      CHECK(std::abs(h.entries(m, n) - hankel_entry(m, n, s, 1.5)) <= 1e-15);
      CHECK(std::abs(b.entries(m, n) - slant_toeplitz_entry(m, n, s, 2, 1.5)) <=
            1e-15);
      CHECK(std::abs(sh.entries(m, n) - slant_hankel_entry(m, n, s, 2, 1.5)) <=
            1e-15);
      CHECK(w.entries(m, n) ==
            slant_shift_entry(m, n, 2, 1.5, Convention::Monomial));
    }
  }
}

TEST_CASE("adjoint shift is the conjugate transpose of the shift") {
  for (Convention conv : {Convention::Monomial, Convention::Normalized}) {
    SpaceParams p = params(2.0, 3, 11);
    OperatorMatrix w = build_matrix(OperatorKind::SlantShift, std::nullopt, p,
                                    conv);
    OperatorMatrix wa =
        build_matrix(OperatorKind::SlantShiftAdjoint, std::nullopt, p, conv);
    CHECK((wa.entries - w.entries.adjoint()).norm() == 0.0);
  }
}

TEST_CASE("normalized convention rescales the slant rows") {
  testutil::SymbolGen gen(13);
  HarmonicSymbol s = gen.symbol(3);
  SpaceParams p = params(1.0, 2, 10);
  for (OperatorKind kind :
       {OperatorKind::SlantToeplitz, OperatorKind::SlantLittleHankel}) {
    OperatorMatrix mono = build_matrix(kind, s, p, Convention::Monomial);
    OperatorMatrix norm = build_matrix(kind, s, p, Convention::Normalized);
    for (int m = 0; m < 10; ++m) {
      double scale = weight_ratio(2 * m, m, 1.0);
      for (int n = 0; n < 10; ++n) {
        CHECK(std::abs(norm.entries(m, n) - scale * mono.entries(m, n)) <=
              1e-13 * std::max(1.0, std::abs(mono.entries(m, n))));
      }
    }
  }
  // Toeplitz ignores the convention
  OperatorMatrix t0 = build_matrix(OperatorKind::Toeplitz, s, p,
                                   Convention::Monomial);
  OperatorMatrix t1 = build_matrix(OperatorKind::Toeplitz, s, p,
                                   Convention::Normalized);
  CHECK((t0.entries - t1.entries).norm() == 0.0);
}

TEST_CASE("assembly is bit-identical across worker counts") {
  testutil::SymbolGen gen(99);
  HarmonicSymbol s = gen.symbol(5);
  SpaceParams p = params(0.75, 2, 33);

  setenv("BERGMAN_WORKERS", "1", 1);
  OperatorMatrix one = build_matrix(OperatorKind::SlantToeplitz, s, p);
  setenv("BERGMAN_WORKERS", "4", 1);
  OperatorMatrix four = build_matrix(OperatorKind::SlantToeplitz, s, p);
  setenv("BERGMAN_WORKERS", "3", 1);
  OperatorMatrix three = build_matrix(OperatorKind::SlantToeplitz, s, p);
  unsetenv("BERGMAN_WORKERS");

  CHECK(std::memcmp(one.entries.data(), four.entries.data(),
                    sizeof(Complex) * 33 * 33) == 0);
  CHECK(std::memcmp(one.entries.data(), three.entries.data(),
                    sizeof(Complex) * 33 * 33) == 0);
}

TEST_CASE("kind and convention names round-trip") {
  for (OperatorKind kind :
       {OperatorKind::Toeplitz, OperatorKind::LittleHankel,
        OperatorKind::SlantShift, OperatorKind::SlantShiftAdjoint,
        OperatorKind::SlantToeplitz, OperatorKind::SlantLittleHankel}) {
    CHECK(kind_from_name(kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS((void)kind_from_name("hankel"), ParseError);
  CHECK(convention_from_name("monomial") == Convention::Monomial);
  CHECK(convention_from_name("normalized") == Convention::Normalized);
  CHECK_THROWS_AS((void)convention_from_name("x"), ParseError);
  CHECK(kind_requires_symbol(OperatorKind::Toeplitz));
  CHECK_FALSE(kind_requires_symbol(OperatorKind::SlantShiftAdjoint));
}

TEST_CASE("mixed polynomial arithmetic") {
  MixedPolynomial a = MixedPolynomial::monomial(1, 1);  // z conj(z)
  MixedPolynomial sq = a * a;
  CHECK(sq.coeff(2, 2) == Complex(1, 0));
  CHECK(sq.terms().size() == 1);

  MixedPolynomial b = MixedPolynomial::monomial(2, 0, {0, 1});
  MixedPolynomial sum = a + b;
  CHECK(sum.coeff(1, 1) == Complex(1, 0));
  CHECK(sum.coeff(2, 0) == Complex(0, 1));
  CHECK_FALSE(sum.is_analytic());
  CHECK(b.is_analytic());

  // exact cancellation removes the term
  MixedPolynomial diff = a - a;
  CHECK(diff.empty());

  MixedPolynomial c = a.scaled({2, 0});
  CHECK(c.coeff(1, 1) == Complex(2, 0));

  CHECK(a.max_coeff_distance(c) == 1.0);
  CHECK_THROWS_AS((void)MixedPolynomial::monomial(-1, 0), DomainError);
}

TEST_CASE("mixed polynomial from symbol") {
  HarmonicSymbol s = HarmonicSymbol::from_coefficients(
      {{1, 0}, {2, 0}}, {{0, 3}});
  MixedPolynomial m = MixedPolynomial::from_symbol(s);
  CHECK(m.coeff(0, 0) == Complex(1, 0));
  CHECK(m.coeff(0, 1) == Complex(2, 0));
  CHECK(m.coeff(1, 0) == Complex(0, 3));
  CHECK(m.terms().size() == 3);
}
