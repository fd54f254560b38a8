#include "doctest.h"
#include "mzv/exactnum.hpp"

using namespace mzv;

TEST_CASE("bernoulli values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned k = 1; k < 20; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("bernoulli recurrence") {
  for (unsigned n = 1; n <= 40; ++n) {
    Rational s = 0;
    for (unsigned k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(s == 0);
  }
}

TEST_CASE("rational text form") {
  CHECK(to_string(frac(3, 6)) == "1/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("b series") {
  auto b1 = b_series(1);
  CHECK(b1.coeff(-1) == 1);
  CHECK(b1.coeff(0) == 0);
  CHECK(b1.coeff(1) == Rational(1, 12));
  CHECK_THROWS(b1.coeff(2));
  auto b3 = b_series(3);
  CHECK(b3.coeff(3) == Rational(-1, 720));
  auto b0 = b_series(0);
  CHECK(b0.coeff(0) == 0);
  auto b = b_series(41);
  for (int d = 0; d <= 40; d += 2) CHECK(b.coeff(d) == 0);
}

TEST_CASE("laurent arithmetic tracks the window") {
  auto b = b_series(9);
  auto sq = b * b;
  // x^-2 + 1/6 + ...
  CHECK(sq.coeff(-2) == 1);
  CHECK(sq.coeff(0) == Rational(1, 6));
  // product of series starting at x^-1 is only known up to order 8
  CHECK(sq.truncation_order() == 8);
  CHECK((b - b).is_zero());
  CHECK(b.agrees_with(b_series(15)));
  CHECK(!b.agrees_with(b_series(15) + LaurentSeries::monomial(1, 3, 15)));
}
