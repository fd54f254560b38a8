// Commutative encodings: sparse polynomials, rational functions with
// linear-form denominators, rho / ell maps and reduction.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/exactnum.hpp"
#include "mzv/ncwords.hpp"

namespace mzv {

constexpr int kMaxVars = 7;

// exponent vector packed into one word: byte 7 is the total degree,
// bytes 6..0 are e0..e6.  Monomial product is integer addition.
using Mono = std::uint64_t;
inline int mono_exp(Mono m, int k) { return (int)((m >> (8 * (6 - k))) & 0xffu); }
inline int mono_deg(Mono m) { return (int)(m >> 56); }
Mono mono_make(const std::vector<int>& e);
inline Mono mono_var(int k, int e = 1) { return ((Mono)e << (8 * (6 - k))) | ((Mono)e << 56); }

enum class Frame { X, Y };  // x1..xr  or  y0..yr

class MPoly {
 public:
  using Term = std::pair<Mono, Rational>;

  explicit MPoly(int nv = 0) : nv_(nv) {}
  static MPoly constant(int nv, const Rational& c);
  static MPoly var(int nv, int k);
  static MPoly monomial(int nv, const std::vector<int>& e, const Rational& c = 1);
  static MPoly from_terms(int nv, std::vector<Term> t);  // sums duplicates

  int nv() const { return nv_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rational coeff(const std::vector<int>& e) const;
  int max_degree() const;
  int min_degree() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& c) const;
  MPoly operator-() const { return *this * Rational(-1); }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  bool operator==(const MPoly& o) const { return nv_ == o.nv_ && t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(unsigned e) const;
  MPoly homogeneous_part(int d) const;
  std::map<int, MPoly> parts() const;

  // x_k -> sum_j img[k][j] x_j over new_nv variables
  MPoly subst(int new_nv, const std::vector<std::vector<Rational>>& img) const;
  // x_k -> x_{map[k]}
  MPoly rename(int new_nv, const std::vector<int>& map) const;
  MPoly with_nv(int new_nv) const;  // add unused trailing variables
  MPoly diff(int k) const;

  std::string str(Frame f) const;

 private:
  int nv_;
  std::vector<Term> t_;  // sorted by Mono, no zeros
};

// integer linear form, canonical: content 1, first nonzero coefficient positive
struct LinForm {
  int nv = 0;
  std::array<int, kMaxVars> c{};

  // canonicalize raw coefficients; raw = scale * form
  static LinForm make(std::vector<Rational> raw, Rational* scale);
  static LinForm var(int nv, int i);                // x_i
  static LinForm diff(int nv, int i, int j);        // x_i - x_j
  int lead() const;
  MPoly poly() const;
  bool operator<(const LinForm& o) const { return nv != o.nv ? nv < o.nv : c < o.c; }
  bool operator==(const LinForm& o) const { return nv == o.nv && c == o.c; }
  std::string str(Frame f) const;
};
LinForm parse_linform(const std::string& s, int nv, Frame f, Rational* scale);

// exact division by a linear form; nullopt when it does not divide
std::optional<MPoly> divide_by_form(const MPoly& p, const LinForm& l);

class RatFn {
 public:
  using Den = std::map<LinForm, int>;

  explicit RatFn(int nv = 0) : num_(nv) {}
  RatFn(MPoly num) : num_(std::move(num)) {}  // NOLINT
  RatFn(MPoly num, Den den);
  static RatFn constant(int nv, const Rational& c) { return RatFn(MPoly::constant(nv, c)); }
  static RatFn var(int nv, int k) { return RatFn(MPoly::var(nv, k)); }
  static RatFn inv_form(const LinForm& l, int power = 1);
  static RatFn inv_var(int nv, int k, int power = 1) { return inv_form(LinForm::var(nv, k), power); }

  int nv() const { return num_.nv(); }
  const MPoly& num() const { return num_; }
  const Den& den() const { return den_; }
  int den_degree() const;
  MPoly den_poly() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator*(const Rational& c) const;
  RatFn operator-() const { return *this * Rational(-1); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  // divide by the given form (adds a pole)
  RatFn div_form(const LinForm& l, int power = 1) const;

  RatFn subst(int new_nv, const std::vector<std::vector<Rational>>& img) const;
  RatFn rename(int new_nv, const std::vector<int>& map) const;
  RatFn with_nv(int new_nv) const;
  RatFn negate_vars() const;  // f(-x)

  // homogeneous decomposition by degree = deg(num) - deg(den)
  std::map<int, RatFn> parts() const;
  RatFn part(int d) const;
  RatFn degree_range(int lo, int hi) const;
  std::optional<int> homogeneous_degree() const;

  std::string str(Frame f) const;

 private:
  void reduce();
  MPoly num_;
  Den den_;
};

RatFn sum(const std::vector<RatFn>& fs, int nv);

// graded element: depth -> reduced rational function in x1..xr
struct DepthTuple {
  std::map<int, RatFn> comps;
  std::optional<int> weight;
  std::string normalization;  // "", "canonical", "heretical"

  RatFn get(int r) const;
  void set(int r, const RatFn& f);
  int max_depth() const { return comps.empty() ? 0 : comps.rbegin()->first; }
  DepthTuple operator+(const DepthTuple& o) const;
  DepthTuple operator-(const DepthTuple& o) const;
  DepthTuple operator*(const Rational& c) const;
  DepthTuple truncated(int max_depth) const;
  bool operator==(const DepthTuple& o) const;
};

// word polynomial of counting degree r -> polynomial in y0..yr
MPoly rho(const NCPoly& p, int r);
NCPoly rho_inv(const MPoly& f, Genus g = Genus::G0);

bool is_translation_invariant(const MPoly& f);
bool is_translation_invariant(const RatFn& f);
// y-frame (nv = r+1) -> x-frame (nv = r), y0 = 0; throws if not invariant
RatFn reduce_frame(const RatFn& f);
MPoly reduce_frame(const MPoly& f);
// x-frame -> y-frame, x_i = y_i - y0
RatFn unreduce(const RatFn& f);
MPoly unreduce(const MPoly& f);

// l_r = (y0-y1)(y1-y2)...(y_{r-1}-y_r) and c_r = l_r (y0-y_r), y-frame
RatFn ell_r(int r);

// rho'(d) for d(x1) = 0: depth-r part of rho(d(x0)) / (y0 - y_r), y-frame
std::map<int, RatFn> rho_prime_y(const Derivation& d);
DepthTuple rho_prime(const Derivation& d);
// ell(p): depth r part divided by l_r (y-frame)
std::map<int, RatFn> ell(const NCPoly& p);
// ell'(d) for genus-1 d with zero a-coefficient in d(b): rho(d(a))_r / c_r
std::map<int, RatFn> ell_prime_y(const Derivation& d);
DepthTuple ell_prime(const Derivation& d);

// one-variable Laurent polynomial from the known part of a series
RatFn from_laurent(const LaurentSeries& s);

// Res along l = 0 of a function with at most a simple pole there
RatFn residue(const RatFn& f, const LinForm& l);

}  // namespace mzv
