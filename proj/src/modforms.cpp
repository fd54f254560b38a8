#include "mzv/modforms.hpp"

#include <stdexcept>

#include "mzv/linsys.hpp"

namespace mzv {

namespace {

using Img = std::vector<std::vector<Rational>>;

MPoly three_term(const MPoly& p) {
  return p + p.subst(2, Img{{1, -1}, {1, 0}}) + p.subst(2, Img{{0, -1}, {1, -1}});
}

MPoly swapped(const MPoly& p) { return p.subst(2, Img{{0, 1}, {1, 0}}); }

Rational rescale_factor(int i) { return Rational(1) / heretical_factor(i); }

// rows of a linear system indexed by (equation tag, monomial)
struct RowBuilder {
  size_t ncols;
  std::map<std::pair<int, Mono>, std::vector<Rational>> rows;
  void add(const MPoly& p, size_t col, int tag) {
    for (const auto& [m, c] : p.terms()) {
      auto& r = rows[{tag, m}];
      if (r.empty()) r.resize(ncols);
      r[col] += c;
    }
  }
  std::vector<std::vector<Integer>> kernel() const {
    LinSystem s(ncols);
    for (const auto& kv : rows) s.add_row(kv.second);
    return s.kernel();
  }
};

}  // namespace

bool is_period_polynomial(const MPoly& p, bool even_only) {
  if (p.nv() != 2) throw std::invalid_argument("period polynomial: two variables expected");
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    int e1 = mono_exp(m, 0), e2 = mono_exp(m, 1);
    if (e1 == 0 || e2 == 0) return false;
    if (even_only && (e1 % 2 || e2 % 2)) return false;
  }
  return (p + swapped(p)).is_zero() && three_term(p).is_zero();
}

std::vector<PeriodPolynomial> period_poly_basis(int two_n, bool even_only) {
  if (two_n < 2) throw std::invalid_argument("period polynomials: weight >= 2 required");
  // weight 2n corresponds to degree 2n-2
  int deg = two_n - 2;
  std::vector<Mono> cols;
  for (int k = deg - 1; k >= 1; --k)
    if (!even_only || k % 2 == 0) cols.push_back(mono_make({k, deg - k}));
  RowBuilder rb{cols.size(), {}};
  for (size_t j = 0; j < cols.size(); ++j) {
    MPoly e = MPoly::from_terms(2, {{cols[j], Rational(1)}});
    rb.add(e + swapped(e), j, 0);
    rb.add(three_term(e), j, 1);
  }
  std::vector<PeriodPolynomial> out;
  if (cols.empty()) return out;
  for (const auto& v : rb.kernel()) {
    std::vector<MPoly::Term> t;
    for (size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) t.emplace_back(cols[j], Rational(v[j]));
    out.push_back({two_n, MPoly::from_terms(2, t)});
  }
  return out;
}

Rational KernelElement::at(int i, int j) const {
  if (i == j) return 0;
  if (i < j) {
    auto it = lambda.find({i, j});
    return it == lambda.end() ? Rational(0) : it->second;
  }
  return -at(j, i);
}

RatFn kernel_image(const KernelElement& k) {
  RatFn out(2);
  for (const auto& [ij, c] : k.lambda) out = out + bracket(x1_power(2 * ij.first), x1_power(2 * ij.second)) * c;
  return out;
}

std::vector<KernelElement> kernel_K(int two_n) {
  if (two_n < 4 || two_n % 2) throw std::invalid_argument("kernel: even weight >= 4 required");
  int n = two_n / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; 2 * i < n - 1; ++i) pairs.emplace_back(i, n - 1 - i);
  std::vector<KernelElement> out;
  if (pairs.empty()) return out;
  RowBuilder rb{pairs.size(), {}};
  for (size_t j = 0; j < pairs.size(); ++j)
    rb.add(bracket(x1_power(2 * pairs[j].first), x1_power(2 * pairs[j].second)).num(), j, 0);
  for (const auto& v : rb.kernel()) {
    KernelElement k;
    k.weight = two_n;
    for (size_t j = 0; j < pairs.size(); ++j)
      if (v[j] != 0) k.lambda[pairs[j]] = Rational(v[j]);
    out.push_back(k);
  }
  return out;
}

PeriodPolynomial K_to_period(const KernelElement& k) {
  std::vector<MPoly::Term> t;
  for (const auto& [ij, c] : k.lambda) {
    t.emplace_back(mono_make({2 * ij.first, 2 * ij.second}), c);
    t.emplace_back(mono_make({2 * ij.second, 2 * ij.first}), -c);
  }
  PeriodPolynomial p{k.weight, MPoly::from_terms(2, t)};
  if (!is_period_polynomial(p.value, true)) throw std::logic_error("K_to_period: image is not a period polynomial");
  return p;
}

KernelElement period_to_K(const PeriodPolynomial& p) {
  if (!is_period_polynomial(p.value, true)) throw std::invalid_argument("period_to_K: not an even period polynomial");
  KernelElement k;
  k.weight = p.weight;
  for (const auto& [m, c] : p.value.terms()) {
    int i = mono_exp(m, 0) / 2, j = mono_exp(m, 1) / 2;
    if (i < j) k.lambda[{i, j}] = c;
  }
  return k;
}

KernelElement underline_rescale(const KernelElement& k, bool inverse) {
  KernelElement r;
  r.weight = k.weight;
  for (const auto& [ij, c] : k.lambda) {
    Rational f = rescale_factor(ij.first) * rescale_factor(ij.second);
    r.lambda[ij] = inverse ? Rational(c / f) : Rational(c * f);
  }
  return r;
}

RatFn cuspidal_c_direct(const KernelElement& k, Normalization norm) {
  std::map<int, DepthTuple> sig;
  auto get = [&](int n) -> const DepthTuple& {
    auto it = sig.find(n);
    if (it == sig.end()) it = sig.emplace(n, sigma_c(n, 3, norm).value).first;
    return it->second;
  };
  RatFn out(4);
  for (const auto& [ij, c] : k.lambda) out = out + bracket(get(ij.first), get(ij.second), 4).get(4) * c;
  return out;
}

RatFn cuspidal_c(const KernelElement& k) {
  RatFn xm2 = x1_power(-2);
  RatFn w = xi(1, 3).get(3);
  int n = k.weight / 2;
  RatFn out(4);
  for (int i = 1; i < n - 1; ++i) {
    int j = n - 1 - i;
    Rational l = k.at(i, j);
    if (l == 0) continue;
    std::vector<RatFn> parts;
    for (int a = 1; a < j; ++a) {
      int b = j - a;
      Rational f = bernoulli(2 * a) * bernoulli(2 * b) / bernoulli(2 * j) * Rational(binomial(2 * j, 2 * a)) /
                   Rational(24 * b);
      parts.push_back(bracket(x1_power(2 * a), bracket(x1_power(2 * b), xm2)) * f);
    }
    RatFn t = sum(parts, 3);
    if (j == 1) t = t - w;
    out = out + bracket(x1_power(2 * i), t) * l;
  }
  return out;
}

Derivation derivation_from_ell_prime(const RatFn& f) {
  int r = f.nv();
  RatFn c = ell_r(r) * RatFn(LinForm::diff(r + 1, 0, r).poly());
  RatFn g = unreduce(f) * c;
  if (!g.is_polynomial()) throw std::invalid_argument("ell' preimage: poles outside c_r");
  NCPoly da = rho_inv(g.num(), Genus::G1);
  NCPoly b = NCPoly::letter(Genus::G1, 1);
  NCPoly db = solve_ad_a(-lie_bracket(da, b));
  return Derivation(Genus::G1, da, db, Annihilates::Commutator);
}

Derivation z3_derivation() { return derivation_from_ell_prime(xi(1, 3).get(3) * frac(-1, 12)); }

Derivation elliptic_c(const KernelElement& k) {
  int n = k.weight / 2;
  auto eps = [&](int m) { return epsilon(m, k.weight + 1, Normalization::Heretical).value; };
  Derivation e0 = eps(-1);
  Derivation out = Derivation::zero(Genus::G1);
  Derivation z = z3_derivation();
  for (int i = 1; i < n - 1; ++i) {
    int j = n - 1 - i;
    Rational l = k.at(i, j);
    if (l == 0) continue;
    if (i == 1) out = out + derivation_bracket(z, eps(j)) * l;
    for (int a = 1; a < j; ++a) {
      int b = j - a;
      Derivation t = derivation_bracket(eps(i), derivation_bracket(eps(a), derivation_bracket(eps(b), e0)));
      out = out + t * (l * frac(1, 2 * b));
    }
  }
  return out;
}

}  // namespace mzv
