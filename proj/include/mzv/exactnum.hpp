// Exact rationals, Bernoulli numbers, truncated Laurent series.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mzv {

using Integer = mpz_class;
using Rational = mpq_class;

// canonical a/b (the two-argument mpq constructor does not reduce)
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// "p/q", q omitted when 1
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// B_n with B_1 = -1/2.  Table is built lazily under a mutex.
Rational bernoulli(unsigned n);

// B_{2n}/(2n)!
Rational bernoulli_over_factorial(unsigned two_n);

class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int min_degree, std::vector<Rational> coeffs, int truncation_order);

  static LaurentSeries monomial(const Rational& c, int degree, int truncation_order);

  int min_degree() const { return min_degree_; }
  int truncation_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  // zero outside the stored range; throws if degree > truncation order
  Rational coeff(int degree) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(const Rational& c) const;
  LaurentSeries operator-() const;

  // drop known terms of degree > order
  LaurentSeries truncated(int order) const;

  // equality of coefficients inside the common known window
  bool agrees_with(const LaurentSeries& o) const;

  std::string to_string() const;

 private:
  void normalize();
  int min_degree_ = 0;
  std::vector<Rational> coeffs_;
  int trunc_ = 0;
};

// b(x) = 1/(e^x - 1) + 1/2 = x^{-1} + sum_{n>=1} B_{2n}/(2n)! x^{2n-1}
LaurentSeries b_series(int truncation_order);

}  // namespace mzv
