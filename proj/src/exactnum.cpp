#include "mzv/exactnum.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mzv {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {
std::mutex bern_mu;
std::vector<Rational> bern_table{Rational(1)};
}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(bern_mu);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  while (bern_table.size() <= n) {
    unsigned m = bern_table.size();
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * bern_table[k];
    bern_table.push_back(-s / Rational(m + 1));
  }
  return bern_table[n];
}

Rational bernoulli_over_factorial(unsigned two_n) {
  return bernoulli(two_n) / Rational(factorial(two_n));
}

LaurentSeries::LaurentSeries(int min_degree, std::vector<Rational> coeffs, int truncation_order)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)), trunc_(truncation_order) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int degree, int truncation_order) {
  if (degree > truncation_order || c == 0) return LaurentSeries(0, {}, truncation_order);
  return LaurentSeries(degree, {c}, truncation_order);
}

void LaurentSeries::normalize() {
  // drop anything beyond the truncation order, then trim zeros
  int keep = trunc_ - min_degree_ + 1;
  if (keep < 0) keep = 0;
  if ((int)coeffs_.size() > keep) coeffs_.resize(keep);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    min_degree_ += (int)lead;
  }
}

Rational LaurentSeries::coeff(int d) const {
  if (d > trunc_) throw std::out_of_range("coefficient beyond truncation order");
  int i = d - min_degree_;
  if (i < 0 || i >= (int)coeffs_.size()) return 0;
  return coeffs_[i];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  int t = std::min(trunc_, o.trunc_);
  if (is_zero()) return o.truncated(t);
  if (o.is_zero()) return truncated(t);
  int lo = std::min(min_degree_, o.min_degree_);
  if (t < lo) return LaurentSeries(0, {}, t);
  std::vector<Rational> c(t - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int d = min_degree_ + (int)i;
    if (d <= t) c[d - lo] += coeffs_[i];
  }
  for (size_t i = 0; i < o.coeffs_.size(); ++i) {
    int d = o.min_degree_ + (int)i;
    if (d <= t) c[d - lo] += o.coeffs_[i];
  }
  return LaurentSeries(lo, std::move(c), t);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  // a product is known up to min(ta + min_b, tb + min_a)
  int ma = is_zero() ? 0 : min_degree_;
  int mb = o.is_zero() ? 0 : o.min_degree_;
  int t = std::min(trunc_ + mb, o.trunc_ + ma);
  if (is_zero() || o.is_zero()) return LaurentSeries(0, {}, t);
  int lo = ma + mb;
  if (t < lo) return LaurentSeries(0, {}, t);
  std::vector<Rational> c(t - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      int d = lo + (int)(i + j);
      if (d > t) break;
      c[d - lo] += coeffs_[i] * o.coeffs_[j];
    }
  return LaurentSeries(lo, std::move(c), t);
}

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries r = *this;
  r.trunc_ = std::min(trunc_, order);
  r.normalize();
  return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  int t = std::min(trunc_, o.trunc_);
  int lo = std::min(is_zero() ? t : min_degree_, o.is_zero() ? t : o.min_degree_);
  for (int d = lo; d <= t; ++d)
    if (coeff(d) != o.coeff(d)) return false;
  return true;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << mzv::to_string(coeffs_[i]) << "*x^" << (min_degree_ + (int)i);
  }
  if (first) os << "0";
  os << " + O(x^" << (trunc_ + 1) << ")";
  return os.str();
}

LaurentSeries b_series(int truncation_order) {
  if (truncation_order < -1) throw std::invalid_argument("b_series: truncation order must be >= -1");
  std::vector<Rational> c(truncation_order + 2);
  c[0] = 1;  // x^{-1}
  for (int d = 1; d <= truncation_order; d += 2) c[d + 1] = bernoulli_over_factorial(d + 1);
  return LaurentSeries(-1, std::move(c), truncation_order);
}

}  // namespace mzv
