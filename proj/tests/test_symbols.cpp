#include <cmath>
#include <doctest.h>

#include "bergman/symbol.hpp"
#include "bergman/weights.hpp"

#include "helpers.hpp"

using namespace bergman;

TEST_CASE("zero symbol canonical form") {
  HarmonicSymbol z;
  CHECK(z.is_zero());
  CHECK(z.is_constant());
  CHECK(z.anti().size() == 1);
  CHECK(z.analytic().empty());
  CHECK(serialize_symbol(z) == R"({"analytic":[],"anti":[[0.0,0.0]]})");
}

TEST_CASE("coefficient access and classification") {
  HarmonicSymbol s = HarmonicSymbol::from_coefficients(
      {{1, 0}, {0, 0}, {2, 0}}, {{0, 1}, {0.5, 0}});
  CHECK(s.anti_coeff(0) == Complex(1, 0));
  CHECK(s.anti_coeff(1) == Complex(0, 0));
  CHECK(s.anti_coeff(2) == Complex(2, 0));
  CHECK(s.anti_coeff(3) == Complex(0, 0));
  CHECK(s.analytic_coeff(1) == Complex(0, 1));
  CHECK(s.analytic_coeff(2) == Complex(0.5, 0));
  CHECK(s.analytic_coeff(9) == Complex(0, 0));
  CHECK(s.anti_degree() == 2);
  CHECK(s.analytic_degree() == 2);
  CHECK_FALSE(s.is_analytic());
  CHECK_FALSE(s.is_anti_analytic());
  CHECK_FALSE(s.is_constant());
  CHECK_THROWS_AS((void)s.anti_coeff(-1), DomainError);
  CHECK_THROWS_AS((void)s.analytic_coeff(0), DomainError);

  HarmonicSymbol analytic =
      HarmonicSymbol::from_coefficients({{3, 0}}, {{1, 0}});
  CHECK(analytic.is_analytic());
  CHECK_FALSE(analytic.is_anti_analytic());

  HarmonicSymbol anti = HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {});
  CHECK(anti.is_anti_analytic());
}

TEST_CASE("trailing zeros are trimmed") {
  HarmonicSymbol s = HarmonicSymbol::from_coefficients(
      {{1, 0}, {0, 0}, {0, 0}}, {{0, 0}, {0, 0}});
  CHECK(s.anti().size() == 1);
  CHECK(s.analytic().empty());
  CHECK(s.is_constant());

  // a_0 slot survives even when zero
  HarmonicSymbol z = HarmonicSymbol::from_coefficients({}, {});
  CHECK(z.anti().size() == 1);
  CHECK(z.is_zero());
}

TEST_CASE("parse accepts the documented forms") {
  HarmonicSymbol one = parse_symbol(R"({"anti":[[1,0]],"analytic":[]})");
  CHECK(one.is_constant());
  CHECK(one.anti_coeff(0) == Complex(1, 0));

  HarmonicSymbol p =
      parse_symbol(R"({"anti":[[0,0]],"analytic":[[1,0],[0.5,0]]})");
  CHECK(p.analytic_coeff(1) == Complex(1, 0));
  CHECK(p.analytic_coeff(2) == Complex(0.5, 0));

  // empty anti is normalized to the canonical zero slot
  HarmonicSymbol q = parse_symbol(R"({"anti":[],"analytic":[[2,0]]})");
  CHECK(q.anti().size() == 1);
  CHECK(q.anti_coeff(0) == Complex(0, 0));

  // integer and float spellings parse to the same symbol
  CHECK(parse_symbol(R"({"anti":[[1,0]],"analytic":[]})") ==
        parse_symbol(R"({"anti":[[1.0,0.0]],"analytic":[]})"));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS((void)parse_symbol("not json"), ParseError);
  CHECK_THROWS_AS((void)parse_symbol(R"({"anti":[[1,0]]})"), ParseError);
  CHECK_THROWS_AS((void)parse_symbol(R"([1,2,3])"), ParseError);
  CHECK_THROWS_AS((void)parse_symbol(R"({"anti":[[1]],"analytic":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      (void)parse_symbol(R"({"anti":[["a",0]],"analytic":[]})"), ParseError);
  CHECK_THROWS_AS((void)parse_symbol(R"({"anti":4,"analytic":[]})"),
                  ParseError);

  try {
    parse_symbol(R"({"anti":[[1,0)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("non-finite coefficients are a validation error") {
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS((void)HarmonicSymbol::from_coefficients({{inf, 0}}, {}),
                  ValidationError);
  CHECK_THROWS_AS(
      (void)HarmonicSymbol::from_coefficients({{0, 0}}, {{std::nan(""), 0}}),
      ValidationError);
}

TEST_CASE("serialize then parse round-trips 1000 random symbols") {
  testutil::SymbolGen gen(911);
  for (int i = 0; i < 1000; ++i) {
    HarmonicSymbol s = gen.symbol(6);
    HarmonicSymbol back = parse_symbol(serialize_symbol(s));
    CHECK(back == s);
  }
}

TEST_CASE("normalized coefficient conversion") {
  double alpha = 1.0;
  double g1 = gamma_weight(1, alpha);
  double g2 = gamma_weight(2, alpha);
  HarmonicSymbol s = HarmonicSymbol::from_normalized(
      {{0, 0}, {g1, 0}}, {{0, 0}, {3.0 * g2, 0}}, alpha);
  CHECK(std::abs(s.anti_coeff(1) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(s.analytic_coeff(2) - Complex(3, 0)) < 1e-14);
  // constant slot divides by gamma_0 = 1
  HarmonicSymbol c = HarmonicSymbol::from_normalized({{2, 0}}, {}, alpha);
  CHECK(c.anti_coeff(0) == Complex(2, 0));
}

TEST_CASE("linear dependence detection") {
  testutil::SymbolGen gen(23);
  for (int i = 0; i < 50; ++i) {
    HarmonicSymbol phi = gen.symbol(5);
    Complex c = gen.coeff() + Complex(0.25, 0.25);
    auto got = linear_dependence(phi, testutil::scaled_symbol(phi, c));
    REQUIRE(got.has_value());
    CHECK(std::abs(*got - c) <= 1e-12 * std::max(1.0, std::abs(c)));
  }

  HarmonicSymbol phi =
      HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {{1, 0}});
  HarmonicSymbol psi =
      HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {{-1, 0}});
  CHECK_FALSE(linear_dependence(phi, psi).has_value());

  HarmonicSymbol zero;
  CHECK(linear_dependence(phi, zero) == Complex(0, 0));
  CHECK_FALSE(linear_dependence(zero, phi).has_value());

  // differing support is never dependent
  HarmonicSymbol a = HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}}, {});
  HarmonicSymbol b =
      HarmonicSymbol::from_coefficients({{0, 0}, {1, 0}, {1, 0}}, {});
  CHECK_FALSE(linear_dependence(a, b).has_value());
}

TEST_CASE("truncated exponentials") {
  HarmonicSymbol e3 = truncated_exponential(ExpKind::Analytic, 3);
  CHECK(e3.anti_coeff(0) == Complex(1, 0));
  CHECK(e3.analytic_coeff(1) == Complex(1, 0));
  CHECK(e3.analytic_coeff(2) == Complex(0.5, 0));
  CHECK(e3.analytic_coeff(3) == Complex(1.0 / 6.0, 0));
  CHECK(e3.analytic_degree() == 3);
  CHECK(e3.is_analytic());

  HarmonicSymbol a2 = truncated_exponential(ExpKind::AntiAnalytic, 2);
  CHECK(a2.is_anti_analytic());
  CHECK(a2.anti_coeff(0) == Complex(1, 0));
  CHECK(a2.anti_coeff(2) == Complex(0.5, 0));

  HarmonicSymbol c = truncated_exponential(ExpKind::Analytic, 0);
  CHECK(c.is_constant());
  CHECK(c.anti_coeff(0) == Complex(1, 0));

  CHECK_THROWS_AS((void)truncated_exponential(ExpKind::Analytic, -1),
                  DomainError);
}
