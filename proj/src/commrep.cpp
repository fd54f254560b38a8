#include "mzv/commrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mzv {

namespace {

using Acc = std::unordered_map<Mono, Rational>;

std::vector<MPoly::Term> collect(Acc& acc) {
  std::vector<MPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void check_nv(int a, int b) {
  if (a != b) throw std::invalid_argument("variable count mismatch");
}

}  // namespace

Mono mono_make(const std::vector<int>& e) {
  if ((int)e.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Mono m = 0;
  int d = 0;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 || e[k] > 255) throw std::invalid_argument("exponent out of range");
    m |= (Mono)e[k] << (8 * (6 - (int)k));
    d += e[k];
  }
  if (d > 255) throw std::invalid_argument("degree out of range");
  return m | ((Mono)d << 56);
}

MPoly MPoly::constant(int nv, const Rational& c) {
  MPoly p(nv);
  if (c != 0) p.t_.emplace_back(0, c);
  return p;
}

MPoly MPoly::var(int nv, int k) {
  if (k < 0 || k >= nv) throw std::out_of_range("variable index");
  MPoly p(nv);
  p.t_.emplace_back(mono_var(k), Rational(1));
  return p;
}

MPoly MPoly::monomial(int nv, const std::vector<int>& e, const Rational& c) {
  if ((int)e.size() != nv) throw std::invalid_argument("exponent vector length");
  MPoly p(nv);
  if (c != 0) p.t_.emplace_back(mono_make(e), c);
  return p;
}

MPoly MPoly::from_terms(int nv, std::vector<Term> t) {
  Acc acc;
  for (auto& [m, c] : t) acc[m] += c;
  MPoly p(nv);
  p.t_ = collect(acc);
  return p;
}

Rational MPoly::coeff(const std::vector<int>& e) const {
  Mono m = mono_make(e);
  auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& a, Mono b) { return a.first < b; });
  return (it != t_.end() && it->first == m) ? it->second : Rational(0);
}

int MPoly::max_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, mono_deg(t.first));
  return d;
}

int MPoly::min_degree() const {
  if (t_.empty()) return -1;
  int d = 1 << 20;
  for (const auto& t : t_) d = std::min(d, mono_deg(t.first));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_nv(nv_, o.nv_);
  MPoly r(nv_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Rational c = t_[i].second + o.t_[j].second;
      if (c != 0) r.t_.emplace_back(t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  check_nv(nv_, o.nv_);
  if (t_.empty() || o.t_.empty()) return MPoly(nv_);
  if (o.t_.size() == 1 && o.t_[0].first == 0) return *this * o.t_[0].second;
  if (t_.size() == 1 && t_[0].first == 0) return o * t_[0].second;
  Acc acc;
  acc.reserve(t_.size() * o.t_.size());
  Rational tmp;
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) {
      tmp = x * y;
      acc[a + b] += tmp;
    }
  MPoly r(nv_);
  r.t_ = collect(acc);
  return r;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly r(nv_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& [m, x] : t_) r.t_.emplace_back(m, x * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(nv_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly r(nv_);
  for (const auto& t : t_)
    if (mono_deg(t.first) == d) r.t_.push_back(t);
  return r;
}

std::map<int, MPoly> MPoly::parts() const {
  std::map<int, MPoly> out;
  for (const auto& t : t_) {
    auto [it, fresh] = out.try_emplace(mono_deg(t.first), nv_);
    it->second.t_.push_back(t);
  }
  return out;
}

MPoly MPoly::subst(int new_nv, const std::vector<std::vector<Rational>>& img) const {
  if ((int)img.size() != nv_) throw std::invalid_argument("subst: image count");
  std::vector<MPoly> lin(nv_, MPoly(new_nv));
  for (int k = 0; k < nv_; ++k) {
    std::vector<Term> ts;
    for (int j = 0; j < new_nv; ++j)
      if (img[k][j] != 0) ts.emplace_back(mono_var(j), img[k][j]);
    lin[k] = from_terms(new_nv, ts);
  }
  std::vector<std::vector<MPoly>> pw(nv_);
  for (const auto& [m, c] : t_)
    for (int k = 0; k < nv_; ++k) {
      int e = mono_exp(m, k);
      auto& v = pw[k];
      if (v.empty()) v.push_back(constant(new_nv, 1));
      while ((int)v.size() <= e) v.push_back(v.back() * lin[k]);
    }
  Acc acc;
  for (const auto& [m, c] : t_) {
    MPoly prod = constant(new_nv, c);
    for (int k = 0; k < nv_; ++k) {
      int e = mono_exp(m, k);
      if (e) prod = prod * pw[k][e];
    }
    for (const auto& [mm, cc] : prod.t_) acc[mm] += cc;
  }
  MPoly r(new_nv);
  r.t_ = collect(acc);
  return r;
}

MPoly MPoly::rename(int new_nv, const std::vector<int>& map) const {
  if ((int)map.size() != nv_) throw std::invalid_argument("rename: map size");
  Acc acc;
  for (const auto& [m, c] : t_) {
    Mono n = 0;
    for (int k = 0; k < nv_; ++k) {
      int e = mono_exp(m, k);
      if (e) n += mono_var(map[k], e);
    }
    acc[n] += c;
  }
  MPoly r(new_nv);
  r.t_ = collect(acc);
  return r;
}

MPoly MPoly::with_nv(int new_nv) const {
  if (new_nv < nv_) throw std::invalid_argument("with_nv: cannot drop variables");
  MPoly r = *this;
  r.nv_ = new_nv;
  return r;
}

MPoly MPoly::diff(int k) const {
  MPoly r(nv_);
  for (const auto& [m, c] : t_) {
    int e = mono_exp(m, k);
    if (e) r.t_.emplace_back(m - mono_var(k), c * e);
  }
  std::sort(r.t_.begin(), r.t_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

namespace {
std::string var_name(Frame f, int k) { return f == Frame::X ? "x" + std::to_string(k + 1) : "y" + std::to_string(k); }
}  // namespace

std::string MPoly::str(Frame f) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads better
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool unit = (m != 0) && a == 1;
    if (!unit) os << to_string(a);
    bool star = !unit;
    for (int k = 0; k < nv_; ++k) {
      int e = mono_exp(m, k);
      if (!e) continue;
      if (star) os << "*";
      star = true;
      os << var_name(f, k);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- LinForm

LinForm LinForm::make(std::vector<Rational> raw, Rational* scale) {
  LinForm l;
  l.nv = (int)raw.size();
  if (l.nv > kMaxVars) throw std::invalid_argument("too many variables");
  Integer den = 1;
  for (auto& q : raw) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints(raw.size());
  Integer g = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    Rational t = raw[i] * Rational(den);
    ints[i] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) {
    if (scale) *scale = 0;
    return l;
  }
  int lead = -1;
  for (size_t i = 0; i < ints.size(); ++i)
    if (ints[i] != 0) {
      lead = (int)i;
      break;
    }
  if (ints[lead] < 0) g = -g;
  for (size_t i = 0; i < ints.size(); ++i) {
    Integer v = ints[i] / g;
    if (!v.fits_sint_p()) throw std::overflow_error("linear form coefficient too large");
    l.c[i] = (int)v.get_si();
  }
  if (scale) *scale = raw[lead] / Rational(l.c[lead]);
  return l;
}

LinForm LinForm::var(int nv, int i) {
  LinForm l;
  l.nv = nv;
  l.c[i] = 1;
  return l;
}

LinForm LinForm::diff(int nv, int i, int j) {
  if (i == j) throw std::invalid_argument("zero linear form");
  LinForm l;
  l.nv = nv;
  l.c[i] = 1;
  l.c[j] = -1;
  if (i > j) {
    l.c[i] = -1;
    l.c[j] = 1;
  }
  return l;
}

int LinForm::lead() const {
  for (int i = 0; i < nv; ++i)
    if (c[i]) return i;
  return -1;
}

MPoly LinForm::poly() const {
  std::vector<MPoly::Term> t;
  for (int i = 0; i < nv; ++i)
    if (c[i]) t.emplace_back(mono_var(i), Rational(c[i]));
  return MPoly::from_terms(nv, t);
}

std::string LinForm::str(Frame f) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nv; ++i) {
    if (!c[i]) continue;
    int a = c[i];
    if (a < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(a) != 1) os << std::abs(a);
    os << var_name(f, i);
    first = false;
  }
  return os.str();
}

LinForm parse_linform(const std::string& s, int nv, Frame f, Rational* scale) {
  std::vector<Rational> raw(nv);
  char letter = f == Frame::X ? 'x' : 'y';
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long coef = 1;
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    if (j > i) coef = std::stol(s.substr(i, j - i));
    i = j;
    if (i >= s.size() || s[i] != letter) throw std::invalid_argument("bad linear form: " + s);
    ++i;
    j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    if (j == i) throw std::invalid_argument("bad linear form: " + s);
    int idx = std::stoi(s.substr(i, j - i)) - (f == Frame::X ? 1 : 0);
    i = j;
    if (idx < 0 || idx >= nv) throw std::invalid_argument("variable out of range in: " + s);
    raw[idx] += Rational(sign * coef);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty linear form");
  Rational sc;
  LinForm l = LinForm::make(raw, &sc);
  if (sc == 0) throw std::invalid_argument("zero linear form: " + s);
  if (scale) *scale = sc;
  return l;
}

std::optional<MPoly> divide_by_form(const MPoly& p, const LinForm& l) {
  int nv = p.nv();
  check_nv(nv, l.nv);
  if (p.is_zero()) return MPoly(nv);
  int k = l.lead();
  Rational c(l.c[k]);
  std::map<int, MPoly> R;  // coefficient of x_k^e
  int emax = 0;
  {
    std::map<int, std::vector<MPoly::Term>> tmp;
    for (const auto& [m, a] : p.terms()) {
      int e = mono_exp(m, k);
      emax = std::max(emax, e);
      tmp[e].emplace_back(e ? m - mono_var(k, e) : m, a);
    }
    for (auto& [e, ts] : tmp) R.emplace(e, MPoly::from_terms(nv, std::move(ts)));
  }
  if (emax == 0) return std::nullopt;
  MPoly rest(nv);  // L - c x_k
  {
    std::vector<MPoly::Term> t;
    for (int i = 0; i < nv; ++i)
      if (i != k && l.c[i]) t.emplace_back(mono_var(i), Rational(l.c[i]));
    rest = MPoly::from_terms(nv, t);
  }
  Rational cinv = 1 / c;
  std::vector<MPoly> Q(emax, MPoly(nv));
  MPoly prev(nv);
  for (int j = emax - 1; j >= 0; --j) {
    MPoly rj = R.count(j + 1) ? R.at(j + 1) : MPoly(nv);
    Q[j] = (rj - rest * prev) * cinv;
    prev = Q[j];
  }
  MPoly r0 = R.count(0) ? R.at(0) : MPoly(nv);
  if (!(r0 - rest * Q[0]).is_zero()) return std::nullopt;
  std::vector<MPoly::Term> out;
  for (int j = 0; j < emax; ++j)
    for (const auto& [m, a] : Q[j].terms()) out.emplace_back(j ? m + mono_var(k, j) : m, a);
  return MPoly::from_terms(nv, std::move(out));
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(MPoly num, Den den) : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [l, m] : den_) {
    check_nv(l.nv, num_.nv());
    if (m < 0) throw std::invalid_argument("negative multiplicity");
  }
  reduce();
}

RatFn RatFn::inv_form(const LinForm& l, int power) {
  RatFn r(MPoly::constant(l.nv, 1));
  if (power > 0) r.den_[l] = power;
  return r;
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = divide_by_form(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
}

int RatFn::den_degree() const {
  int d = 0;
  for (const auto& kv : den_) d += kv.second;
  return d;
}

MPoly RatFn::den_poly() const {
  MPoly d = MPoly::constant(nv(), 1);
  for (const auto& [l, m] : den_) d = d * l.poly().pow(m);
  return d;
}

namespace {
MPoly lift(const MPoly& num, const RatFn::Den& have, const RatFn::Den& want) {
  MPoly r = num;
  for (const auto& [l, m] : want) {
    auto it = have.find(l);
    int h = it == have.end() ? 0 : it->second;
    if (m > h) r = r * l.poly().pow(m - h);
  }
  return r;
}
}  // namespace

RatFn RatFn::operator+(const RatFn& o) const {
  check_nv(nv(), o.nv());
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
  Den lcm = den_;
  for (const auto& [l, m] : o.den_) lcm[l] = std::max(lcm[l], m);
  return RatFn(lift(num_, den_, lcm) + lift(o.num_, o.den_, lcm), lcm);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  check_nv(nv(), o.nv());
  if (is_zero() || o.is_zero()) return RatFn(nv());
  Den d = den_;
  for (const auto& [l, m] : o.den_) d[l] += m;
  return RatFn(num_ * o.num_, d);
}

RatFn RatFn::operator*(const Rational& c) const {
  if (c == 0) return RatFn(nv());
  RatFn r = *this;
  r.num_ = num_ * c;
  return r;
}

RatFn RatFn::div_form(const LinForm& l, int power) const {
  Den d = den_;
  d[l] += power;
  return RatFn(num_, d);
}

RatFn RatFn::subst(int new_nv, const std::vector<std::vector<Rational>>& img) const {
  MPoly n = num_.subst(new_nv, img);
  Den d;
  Rational factor = 1;
  for (const auto& [l, m] : den_) {
    std::vector<Rational> raw(new_nv);
    for (int k = 0; k < l.nv; ++k)
      if (l.c[k])
        for (int j = 0; j < new_nv; ++j) raw[j] += Rational(l.c[k]) * img[k][j];
    Rational sc;
    LinForm nl = LinForm::make(raw, &sc);
    if (sc == 0) throw std::domain_error("substitution hits a pole");
    d[nl] += m;
    for (int i = 0; i < m; ++i) factor /= sc;
  }
  return RatFn(n * factor, d);
}

RatFn RatFn::rename(int new_nv, const std::vector<int>& map) const {
  std::vector<std::vector<Rational>> img(nv(), std::vector<Rational>(new_nv));
  for (int k = 0; k < nv(); ++k) img[k][map[k]] = 1;
  if (den_.empty()) return RatFn(num_.rename(new_nv, map));
  return subst(new_nv, img);
}

RatFn RatFn::with_nv(int new_nv) const {
  Den d;
  for (const auto& [l, m] : den_) {
    LinForm nl = l;
    nl.nv = new_nv;
    d[nl] = m;
  }
  RatFn r;
  r.num_ = num_.with_nv(new_nv);
  r.den_ = std::move(d);
  return r;
}

RatFn RatFn::negate_vars() const {
  std::vector<std::vector<Rational>> img(nv(), std::vector<Rational>(nv()));
  for (int k = 0; k < nv(); ++k) img[k][k] = -1;
  return subst(nv(), img);
}

std::map<int, RatFn> RatFn::parts() const {
  std::map<int, RatFn> out;
  int dd = den_degree();
  for (auto& [d, p] : num_.parts()) out.emplace(d - dd, RatFn(p, den_));
  return out;
}

RatFn RatFn::part(int d) const {
  return RatFn(num_.homogeneous_part(d + den_degree()), den_);
}

RatFn RatFn::degree_range(int lo, int hi) const {
  int dd = den_degree();
  std::vector<MPoly::Term> t;
  for (const auto& term : num_.terms()) {
    int d = mono_deg(term.first) - dd;
    if (d >= lo && d <= hi) t.push_back(term);
  }
  return RatFn(MPoly::from_terms(nv(), t), den_);
}

std::optional<int> RatFn::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  int lo = num_.min_degree(), hi = num_.max_degree();
  if (lo != hi) return std::nullopt;
  return lo - den_degree();
}

std::string RatFn::str(Frame f) const {
  std::string n = num_.str(f);
  if (den_.empty()) return n;
  std::ostringstream os;
  os << "(" << n << ")/(";
  bool first = true;
  for (const auto& [l, m] : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << l.str(f) << ")";
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

RatFn sum(const std::vector<RatFn>& fs, int nv) {
  RatFn::Den lcm;
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    check_nv(f.nv(), nv);
    any = true;
    for (const auto& [l, m] : f.den()) lcm[l] = std::max(lcm[l], m);
  }
  if (!any) return RatFn(nv);
  std::map<std::pair<LinForm, int>, MPoly> powcache;
  auto pw = [&](const LinForm& l, int e) -> const MPoly& {
    auto key = std::make_pair(l, e);
    auto it = powcache.find(key);
    if (it == powcache.end()) it = powcache.emplace(key, l.poly().pow(e)).first;
    return it->second;
  };
  Acc acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    MPoly n = f.num();
    for (const auto& [l, m] : lcm) {
      auto it = f.den().find(l);
      int h = it == f.den().end() ? 0 : it->second;
      if (m > h) n = n * pw(l, m - h);
    }
    for (const auto& [mm, c] : n.terms()) acc[mm] += c;
  }
  MPoly num = MPoly::from_terms(nv, {});
  num = MPoly::from_terms(nv, collect(acc));
  return RatFn(num, lcm);
}

// ---------------------------------------------------------------- DepthTuple

RatFn DepthTuple::get(int r) const {
  auto it = comps.find(r);
  return it == comps.end() ? RatFn(r) : it->second;
}

void DepthTuple::set(int r, const RatFn& f) {
  if (f.is_zero()) comps.erase(r);
  else comps[r] = f;
}

DepthTuple DepthTuple::operator+(const DepthTuple& o) const {
  DepthTuple t = *this;
  for (const auto& [r, f] : o.comps) t.set(r, t.get(r) + f);
  return t;
}

DepthTuple DepthTuple::operator-(const DepthTuple& o) const { return *this + o * Rational(-1); }

DepthTuple DepthTuple::operator*(const Rational& c) const {
  DepthTuple t = *this;
  t.comps.clear();
  for (const auto& [r, f] : comps) t.set(r, f * c);
  return t;
}

DepthTuple DepthTuple::truncated(int md) const {
  DepthTuple t = *this;
  for (auto it = t.comps.begin(); it != t.comps.end();)
    if (it->first > md) it = t.comps.erase(it);
    else ++it;
  return t;
}

bool DepthTuple::operator==(const DepthTuple& o) const {
  auto nz = [](const std::map<int, RatFn>& m) {
    std::map<int, RatFn> r;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) r.emplace(k, v);
    return r;
  };
  return nz(comps) == nz(o.comps);
}

// ---------------------------------------------------------------- rho and friends

MPoly rho(const NCPoly& p, int r) {
  std::vector<MPoly::Term> t;
  for (const auto& [w, c] : p.terms()) {
    if ((int)w.count() != r) throw std::invalid_argument("rho: mixed counting degree");
    std::vector<int> e(r + 1, 0);
    int k = 0;
    for (std::uint32_t i = 0; i < w.len; ++i) {
      if (w.at(i)) ++k;
      else ++e[k];
    }
    t.emplace_back(mono_make(e), c);
  }
  return MPoly::from_terms(r + 1, std::move(t));
}

NCPoly rho_inv(const MPoly& f, Genus g) {
  NCPoly p(g);
  int nv = f.nv();
  for (const auto& [m, c] : f.terms()) {
    Word w;
    for (int k = 0; k < nv; ++k) {
      if (k) w = w + Word::letter(1);
      w = w + Word::power(0, mono_exp(m, k));
    }
    p.add_term(w, c);
  }
  return p;
}

namespace {
MPoly euler(const MPoly& f) {
  MPoly s(f.nv());
  for (int k = 0; k < f.nv(); ++k) s = s + f.diff(k);
  return s;
}
}  // namespace

bool is_translation_invariant(const MPoly& f) { return euler(f).is_zero(); }

bool is_translation_invariant(const RatFn& f) {
  MPoly d = f.den_poly();
  return (euler(f.num()) * d - f.num() * euler(d)).is_zero();
}

namespace {
std::vector<std::vector<Rational>> reduce_img(int nv) {
  std::vector<std::vector<Rational>> img(nv, std::vector<Rational>(nv - 1));
  for (int i = 1; i < nv; ++i) img[i][i - 1] = 1;
  return img;
}
std::vector<std::vector<Rational>> unreduce_img(int nv) {
  std::vector<std::vector<Rational>> img(nv, std::vector<Rational>(nv + 1));
  for (int i = 0; i < nv; ++i) {
    img[i][0] = -1;
    img[i][i + 1] = 1;
  }
  return img;
}
}  // namespace

RatFn reduce_frame(const RatFn& f) {
  if (f.nv() < 1) throw std::invalid_argument("reduce: empty frame");
  if (!is_translation_invariant(f)) throw std::invalid_argument("reduce: not translation invariant");
  return f.subst(f.nv() - 1, reduce_img(f.nv()));
}

MPoly reduce_frame(const MPoly& f) {
  if (f.nv() < 1) throw std::invalid_argument("reduce: empty frame");
  if (!is_translation_invariant(f)) throw std::invalid_argument("reduce: not translation invariant");
  return f.subst(f.nv() - 1, reduce_img(f.nv()));
}

RatFn unreduce(const RatFn& f) { return f.subst(f.nv() + 1, unreduce_img(f.nv())); }
MPoly unreduce(const MPoly& f) { return f.subst(f.nv() + 1, unreduce_img(f.nv())); }

RatFn ell_r(int r) {
  MPoly p = MPoly::constant(r + 1, 1);
  for (int i = 0; i < r; ++i) p = p * LinForm::diff(r + 1, i, i + 1).poly();
  return RatFn(p);
}

std::map<int, RatFn> rho_prime_y(const Derivation& d) {
  if (d.genus != Genus::G0) throw std::invalid_argument("rho': genus-0 derivation expected");
  if (!d.second.is_zero()) throw std::invalid_argument("rho': derivation must kill x1");
  std::map<int, NCPoly> by;
  for (const auto& [w, c] : d.first.terms()) {
    auto it = by.try_emplace((int)w.count(), Genus::G0).first;
    it->second.add_term(w, c);
  }
  std::map<int, RatFn> out;
  for (const auto& [r, p] : by) {
    if (r == 0) throw std::invalid_argument("rho': depth-0 part present");
    out.emplace(r, RatFn(rho(p, r)).div_form(LinForm::diff(r + 1, 0, r)));
  }
  return out;
}

DepthTuple rho_prime(const Derivation& d) {
  DepthTuple t;
  for (const auto& [r, f] : rho_prime_y(d)) t.set(r, reduce_frame(f));
  return t;
}

std::map<int, RatFn> ell(const NCPoly& p) {
  std::map<int, NCPoly> by;
  for (const auto& [w, c] : p.terms()) by.try_emplace((int)w.count(), p.genus()).first->second.add_term(w, c);
  std::map<int, RatFn> out;
  for (const auto& [r, q] : by) {
    RatFn f(rho(q, r));
    for (int i = 0; i < r; ++i) f = f.div_form(LinForm::diff(r + 1, i, i + 1));
    out.emplace(r, f);
  }
  return out;
}

std::map<int, RatFn> ell_prime_y(const Derivation& d) {
  if (d.genus != Genus::G1) throw std::invalid_argument("ell': genus-1 derivation expected");
  if (d.second.coeff(Word::letter(0)) != 0) throw std::invalid_argument("ell': derivation not in B^0");
  std::map<int, NCPoly> by;
  for (const auto& [w, c] : d.first.terms()) by.try_emplace((int)w.count(), Genus::G1).first->second.add_term(w, c);
  std::map<int, RatFn> out;
  for (const auto& [r, q] : by) {
    if (r == 0) throw std::invalid_argument("ell': image of a has B-degree 0 part");
    RatFn f(rho(q, r));
    for (int i = 0; i < r; ++i) f = f.div_form(LinForm::diff(r + 1, i, i + 1));
    out.emplace(r, f.div_form(LinForm::diff(r + 1, 0, r)));
  }
  return out;
}

DepthTuple ell_prime(const Derivation& d) {
  DepthTuple t;
  for (const auto& [r, f] : ell_prime_y(d)) t.set(r, reduce_frame(f));
  return t;
}

RatFn from_laurent(const LaurentSeries& s) {
  RatFn out(1);
  if (s.is_zero()) return out;
  std::vector<MPoly::Term> pos;
  for (int d = std::max(0, s.min_degree()); d <= s.truncation_order(); ++d)
    if (s.coeff(d) != 0) pos.emplace_back(mono_var(0, d), s.coeff(d));
  out = RatFn(MPoly::from_terms(1, pos));
  for (int d = s.min_degree(); d < 0; ++d)
    if (s.coeff(d) != 0) out = out + RatFn::inv_var(1, 0, -d) * s.coeff(d);
  return out;
}

RatFn residue(const RatFn& f, const LinForm& l) {
  auto it = f.den().find(l);
  if (it == f.den().end()) return RatFn(f.nv());
  if (it->second > 1) throw std::domain_error("residue: pole of order > 1");
  RatFn::Den d = f.den();
  d.erase(l);
  RatFn g(f.num(), d);
  int k = l.lead();
  int nv = f.nv();
  std::vector<std::vector<Rational>> img(nv, std::vector<Rational>(nv));
  for (int i = 0; i < nv; ++i) img[i][i] = 1;
  img[k][k] = 0;
  for (int j = 0; j < nv; ++j)
    if (j != k && l.c[j]) img[k][j] = frac(-l.c[j], l.c[k]);
  return g.subst(nv, img);
}

}  // namespace mzv
