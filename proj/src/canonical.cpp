#include "mzv/canonical.hpp"

#include <stdexcept>

namespace mzv {

std::string normalization_name(Normalization n) { return n == Normalization::Canonical ? "canonical" : "heretical"; }

Rational heretical_factor(int n) {
  if (n == -1) return frac(1, 12);
  if (n < -1) throw std::invalid_argument("heretical factor: n >= -1");
  return bernoulli_over_factorial(2 * n);
}

DepthTuple s_elements() {
  DepthTuple s;
  s.set(1, RatFn::inv_var(1, 0) * frac(1, 2));
  RatFn a = RatFn::inv_var(2, 0) * RatFn::inv_var(2, 1);
  RatFn b = RatFn::inv_var(2, 1) * RatFn::inv_form(LinForm::diff(2, 0, 1));
  s.set(2, (a + b) * frac(1, 12));
  s.set(3, bracket(s.get(1), s.get(2)) * frac(1, 2));
  s.weight = 0;
  return s;
}

RatFn x1_power(int two_n) {
  if (two_n >= 0) return RatFn(MPoly::var(1, 0).pow(two_n));
  return RatFn::inv_var(1, 0, -two_n);
}

DepthTuple xi(int n, int max_depth) {
  if (n < -1) throw std::invalid_argument("xi: n >= -1");
  if (max_depth < 1 || max_depth > 4) throw std::invalid_argument("xi: depth 1..4");
  static const DepthTuple s = s_elements();
  DepthTuple t;
  t.set(1, x1_power(2 * n));
  DepthTuple out = exp_ad(s, t, max_depth);
  out.weight = 2 * n + 1;
  out.normalization = "canonical";
  return out;
}

DepthTuple xi_heretical(int n, int max_depth) {
  DepthTuple t = xi(n, max_depth) * heretical_factor(n);
  t.weight = 2 * n + 1;
  t.normalization = "heretical";
  return t;
}

namespace {
DepthTuple from_words(const NCPoly& p) {
  DepthTuple t;
  for (unsigned r = 1; r <= 4; ++r) {
    NCPoly part = p.by_count(r);
    if (!part.is_zero()) t.set((int)r, RatFn(reduce_frame(rho(part, (int)r))));
  }
  return t;
}
}  // namespace

SigmaC sigma_c(int n, int max_depth, Normalization norm) {
  if (n < 1) throw std::invalid_argument("sigma^c: n >= 1");
  if (max_depth < 1 || max_depth > 4) throw std::invalid_argument("sigma^c: depth 1..4");
  SigmaC out;
  if (n == 1) {
    NCPoly x0 = NCPoly::letter(Genus::G0, 0), x1 = NCPoly::letter(Genus::G0, 1);
    NCPoly c = lie_bracket(x0, x1);
    NCPoly w = lie_bracket(x0, c) - lie_bracket(x1, c);
    out.value = from_words(w).truncated(max_depth);
    if (max_depth >= 3) out.witness = xi(1, 3).get(3);
    if (norm == Normalization::Heretical) {
      out.value = out.value * heretical_factor(1);
      if (out.witness) out.witness = *out.witness * heretical_factor(1);
    }
  } else {
    DepthTuple v = xi_heretical(n, max_depth);
    if (max_depth >= 3) {
      DepthTuple xm1 = xi_heretical(-1, max_depth - 2);
      for (int a = 1; a < n; ++a) {
        int b = n - a;
        DepthTuple inner = bracket(xi_heretical(b, max_depth - 1), xm1, max_depth - 1);
        DepthTuple outer = bracket(xi_heretical(a, max_depth - 2), inner, max_depth);
        v = v + outer * frac(1, 2 * b);
      }
    }
    if (norm == Normalization::Canonical) v = v * (1 / heretical_factor(n));
    out.value = v;
  }
  out.value.weight = 2 * n + 1;
  out.value.normalization = normalization_name(norm);
  return out;
}

PoleReport verify_polefree(const DepthTuple& t) {
  PoleReport rep;
  for (const auto& [r, f] : t.comps) {
    for (const auto& [l, m] : f.den()) {
      rep.pole_free = false;
      PoleReport::Pole p{r, l, m, std::nullopt};
      if (m == 1) p.residue = residue(f, l);
      rep.poles.push_back(p);
    }
  }
  return rep;
}

RatFn z3() {
  auto inv = [](const LinForm& l, Rational s) { return RatFn::inv_form(l) * s; };
  MPoly x1 = MPoly::var(3, 0), x2 = MPoly::var(3, 1), x3 = MPoly::var(3, 2);
  return sum({RatFn::constant(3, frac(4, 3)),
              RatFn(x1) * inv(LinForm::diff(3, 1, 2), -1),  // x1/(x3-x2)
              RatFn(x3) * inv(LinForm::diff(3, 0, 1), 1),   // x3/(x1-x2)
              RatFn(x3 - x2) * inv(LinForm::var(3, 0), 1),  // (x3-x2)/x1
              RatFn(x1 - x2) * inv(LinForm::var(3, 2), 1)},
             3);
}

RatFn b1_rat(int max_weight) {
  std::vector<MPoly::Term> t;
  for (int n = 1; 2 * n <= max_weight; ++n) t.emplace_back(mono_var(0, 2 * n - 1), bernoulli_over_factorial(2 * n));
  return RatFn::inv_var(1, 0) + RatFn(MPoly::from_terms(1, t));
}

namespace {
// keep degrees <= max_weight - depth
RatFn cut(const RatFn& f, int max_weight) { return f.degree_range(-1000, max_weight - f.nv()); }
}  // namespace

TauResult tau(int W) {
  if (W < 2 || W % 2) throw std::invalid_argument("tau: even max weight >= 2");
  TauResult R;
  R.max_weight = W;
  RatFn b1 = b1_rat(W);
  auto at2 = [](const RatFn& f, Rational a, Rational b) { return f.subst(2, {{a, b}}); };
  RatFn b2 = cut((at2(b1, 1, 0) * at2(b1, 0, 1) + at2(b1, 0, 1) * at2(b1, 1, -1)) * frac(1, 3), W);

  RatFn g1 = b1 * frac(-1, 2);
  RatFn b11 = cut(circ(b1, b1), W);
  RatFn g2 = cut((-b2 + b11 * frac(1, 2)) * frac(1, 4), W);
  // overall sign opposite to the displayed 8 gamma3; the displayed sign fails the semi-homogeneous system
  RatFn g3 = cut((cut(circ(b2, b1), W) - cut(circ(b1, b11), W) * frac(1, 6)) * frac(1, 8), W);
  R.gamma.set(1, g1);
  R.gamma.set(2, g2);
  R.gamma.set(3, g3);

  DepthTuple s = s_elements();
  RatFn s1 = s.get(1), s2 = s.get(2);
  RatFn s1g1 = circ(s1, g1);
  R.theta.set(1, g1);
  R.theta.set(2, cut(g2 + s1g1, W));
  R.theta.set(3, cut(g3 + circ(s1, g2) + circ(s2, g1) + circ(s1, s1g1) * frac(1, 2), W));

  for (int r = 1; r <= 3; ++r) {
    RatFn th = R.theta.get(r);
    for (const auto& [d, part] : th.parts()) {
      if (d < -r || d == 1 - r)
        R.warnings.push_back("Theta^(" + std::to_string(r) + ") has a part of degree " + std::to_string(d));
    }
    R.p.set(r, th.part(-r));
    R.phi.set(r, th.degree_range(2 - r, W - r));
  }

  // counterterms
  DepthTuple xm1 = xi_heretical(-1, 2);
  RatFn C2(2), C3(3);
  for (int n = 1; 2 * n <= W; ++n) {
    DepthTuple x = xi_heretical(n, 2);
    Rational c = frac(1, 2 * n);
    C2 += bracket(xm1.get(1), x.get(1)) * c;
    C3 += (bracket(xm1.get(1), x.get(2)) + bracket(xm1.get(2), x.get(1))) * c;
  }
  C2 = cut(C2, W);
  C3 = cut(C3, W);
  R.C.set(2, C2);
  R.C.set(3, C3);

  R.tau.set(1, R.phi.get(1));
  R.tau.set(2, cut(R.phi.get(2) + C2, W));
  R.tau.set(3, cut(R.phi.get(3) + circ(C2, R.phi.get(1)) + C3, W));
  R.tau.normalization = "";
  return R;
}

DepthTuple tau_star(const TauResult& t) {
  DepthTuple s;
  s.set(1, t.tau.get(1));
  s.set(2, t.tau.get(2) + RatFn::constant(2, frac(1, 48)));
  s.set(3, t.tau.get(3) + t.tau.get(1).rename(3, {0}) * frac(1, 48));
  return s;
}

Rational coefficient(const DepthTuple& t, const std::vector<int>& comp) {
  int r = (int)comp.size();
  if (r == 0) throw std::invalid_argument("empty composition");
  std::vector<int> e;
  for (int n : comp) {
    if (n < 1) throw std::invalid_argument("composition entries must be positive");
    e.push_back(n - 1);
  }
  RatFn f = t.get(r);
  if (!f.is_polynomial()) throw std::domain_error("component has poles");
  return f.num().coeff(e);
}

Rational sigma_coeff(int n, const std::vector<int>& comp) {
  int w = 0;
  for (int c : comp) w += c;
  if (w != 2 * n + 1) throw std::invalid_argument("composition weight must be 2n+1");
  if (comp.size() > 4) throw std::invalid_argument("composition length at most 4");
  SigmaC s = sigma_c(n, (int)comp.size(), Normalization::Canonical);
  return coefficient(s.value, comp);
}

Rational tau_coeff(const TauResult& t, const std::vector<int>& comp) {
  int w = 0;
  for (int c : comp) w += c;
  if (comp.size() > 3) throw std::invalid_argument("composition length at most 3");
  if (w % 2 || w > t.max_weight) throw std::invalid_argument("composition weight must be even and inside the window");
  return coefficient(t.tau, comp);
}

}  // namespace mzv
