#include "mzv/elliptic.hpp"

#include <stdexcept>

namespace mzv {

namespace {

const Genus G1 = Genus::G1;

NCPoly A() { return NCPoly::letter(G1, 0); }
NCPoly B() { return NCPoly::letter(G1, 1); }

// concatenation keeping weight <= wc and b-degree <= bc
NCPoly concat_trunc(const NCPoly& p, const NCPoly& q, unsigned wc, unsigned bc) {
  NCPoly r(p.genus());
  for (const auto& [u, x] : p.terms())
    for (const auto& [v, y] : q.terms()) {
      if (u.len + v.len > wc || u.count() + v.count() > bc) continue;
      r.add_term(u + v, x * y);
    }
  return r;
}

}  // namespace

NCPoly solve_ad_a(const NCPoly& r) {
  if (r.genus() != G1) throw std::invalid_argument("solve_ad_a: genus-1 input expected");
  NCPoly x(G1);
  if (r.is_zero()) return x;
  // [a,x]_v = x_{v minus leading a} - x_{v minus trailing a}; solve word by word
  std::map<Word, Rational> sol;
  auto get = [&](const Word& w) {
    auto it = sol.find(w);
    return it == sol.end() ? Rational(0) : it->second;
  };
  Word a = Word::letter(0);
  unsigned wmax = 0;
  for (const auto& kv : r.terms()) wmax = std::max(wmax, kv.first.len);
  for (const auto& [v, c] : r.terms()) {
    (void)c;
    if (v.len < 2) throw std::domain_error("solve_ad_a: weight-1 component not in the image of ad(a)");
  }
  for (unsigned w = 1; w + 1 <= wmax; ++w) {
    // order by number of trailing a's so the recursion sees resolved words
    std::vector<std::vector<Word>> by_tail(w + 1);
    for (std::uint64_t bits = 0; bits < (1ull << w); ++bits) {
      Word u{bits, w};
      if (u.count() == 0) continue;
      unsigned t = 0;
      while (u.at(w - 1 - t) == 0) ++t;
      by_tail[t].push_back(u);
    }
    for (unsigned t = 0; t <= w; ++t)
      for (const Word& u : by_tail[t]) {
        Rational c;
        if (t == 0) {
          c = r.coeff(a + u);
        } else if (u.at(0) == 1) {
          c = -r.coeff(u + a);
        } else {
          c = r.coeff(a + u) + get(a + u.sub(0, w - 1));
        }
        if (c != 0) sol.emplace(u, c);
      }
  }
  for (const auto& [u, c] : sol) x.add_term(u, c);
  if (lie_bracket(A(), x) != r) throw std::domain_error("solve_ad_a: no solution");
  return x;
}

EpsilonDerivation epsilon(int n, unsigned cutoff, Normalization norm) {
  if (n < -1) throw std::invalid_argument("epsilon: n >= -1 required");
  if ((long)cutoff < 2L * n + 3) throw std::invalid_argument("epsilon: cutoff below the weight of the generator");
  EpsilonDerivation e;
  e.index = 2 * n + 2;
  e.norm = norm;
  if (n == -1) {
    e.value = Derivation(G1, B(), NCPoly(G1), Annihilates::Commutator);
  } else {
    NCPoly da = ad_pow(A(), 2 * n + 2, B());
    NCPoly db = solve_ad_a(-lie_bracket(da, B()));
    e.value = Derivation(G1, da, db, Annihilates::Commutator);
  }
  if (norm == Normalization::Heretical) e.value = e.value * heretical_factor(n);
  return e;
}

PhiImage hain_phi(unsigned cutoff) {
  if (cutoff < 1) throw std::invalid_argument("hain_phi: cutoff >= 1 required");
  PhiImage p;
  p.cutoff = cutoff;
  NCPoly t = A();
  for (unsigned k = 0; k + 1 <= cutoff; ++k) {
    p.x0 += t * (bernoulli(k) / Rational(factorial(k)));
    t = lie_bracket(B(), t);
  }
  return p;
}

NCPoly phi_apply(const NCPoly& p, unsigned wc, unsigned bc) {
  if (p.genus() != Genus::G0) throw std::invalid_argument("phi: genus-0 input expected");
  NCPoly img[2] = {hain_phi(std::max(1u, wc)).x0.max_count(bc), lie_bracket(A(), B())};
  NCPoly one = NCPoly::word(G1, Word{});
  NCPoly out(G1);
  // share work between words with a common prefix
  std::map<Word, NCPoly> cache;
  cache.emplace(Word{}, one);
  for (const auto& [w, c] : p.terms()) {
    std::uint32_t k = w.len;
    while (!cache.count(w.sub(0, k))) --k;
    NCPoly cur = cache.at(w.sub(0, k));
    for (; k < w.len; ++k) {
      cur = concat_trunc(cur, img[w.at(k)], wc, bc);
      cache.emplace(w.sub(0, k + 1), cur);
    }
    out += cur * c;
  }
  return out;
}

NCPoly phi_zero(const NCPoly& p) {
  if (p.genus() != Genus::G0) throw std::invalid_argument("phi0: genus-0 input expected");
  NCPoly img[2] = {A(), lie_bracket(A(), B())};
  NCPoly out(G1);
  for (const auto& [w, c] : p.terms()) {
    NCPoly cur = NCPoly::word(G1, Word{});
    for (std::uint32_t k = 0; k < w.len; ++k) cur = concat(cur, img[w.at(k)]);
    out += cur * c;
  }
  return out;
}

unsigned b_degree(const NCPoly& p) {
  unsigned m = kNoCutoff;
  for (const auto& kv : p.terms()) m = std::min(m, kv.first.count());
  return m;
}

bool in_B(const NCPoly& p, unsigned r) { return p.is_zero() || b_degree(p) >= r; }

bool in_B(const Derivation& d, unsigned r) { return in_B(d.first, r) && in_B(d.second, r + 1); }

BDegreeReport b_degree_predicates(const Derivation& d, unsigned r, unsigned wc) {
  if (d.genus != G1) throw std::invalid_argument("B-degree: genus-1 derivation expected");
  if (!in_B(d.second, 1)) throw std::invalid_argument("B-degree: derivation not in B^0");
  BDegreeReport rep;
  rep.derivation = in_B(d, r);
  rep.on_a = in_B(d.first, r);
  // only b-degree < r can witness failure
  if (r == 0) {
    rep.on_phi = true;
    return rep;
  }
  NCPoly px = hain_phi(wc).x0.max_count(r - 1);
  rep.on_phi = apply_derivation(d, px, kNoCutoff, r - 1).is_zero();
  return rep;
}

bool phi_zero_check(const NCPoly& p) {
  unsigned r;
  if (!p.homogeneous_count(&r)) throw std::invalid_argument("phi0 check: depth-homogeneous input expected");
  MPoly lhs = rho(phi_zero(p), (int)r);
  MPoly rhs = ell_r((int)r).num() * rho(p, (int)r);
  return lhs == rhs;
}

ChiReport chi_equations_check(int n, const RatFn* extra) {
  if (n < 0) throw std::invalid_argument("chi check: n >= 0 required");
  DepthTuple x = xi(n, 3);
  DepthTuple s = s_elements();
  RatFn c1 = unreduce(x.get(1)), c2 = unreduce(x.get(2)), c3 = x.get(3);
  if (extra) c3 = c3 + *extra;
  c3 = unreduce(c3);
  RatFn s1 = unreduce(s.get(1)), s2 = unreduce(s.get(2));
  RatFn y0 = RatFn::var(1, 0);
  auto act = [](const RatFn& f, const RatFn& g) { return odot_y(f, g); };
  RatFn lhs = -act(c1, act(s2, y0));
  RatFn rhs = act(c3, y0) - act(bracket_y(s1, c2), y0) + act(bracket_y(s1, bracket_y(s1, c1)), y0) * frac(1, 2) -
              act(s2, act(c1, y0));
  ChiReport rep;
  rep.residual = lhs - rhs;
  rep.holds = rep.residual.is_zero();
  return rep;
}

LiftReport lift_theorem_check(int n, unsigned wc, bool with_correction) {
  if (n < 1) throw std::invalid_argument("lift check: n >= 1 required");
  const unsigned bc = 3;
  auto eps = [&](int k) { return epsilon(k, wc, Normalization::Heretical).value; };
  Derivation d = eps(n);
  if (with_correction) {
    Derivation e0 = eps(-1);
    for (int b = 1; b < n; ++b) {
      int a = n - b;
      Derivation inner = derivation_bracket(eps(b), e0);
      d = d + derivation_bracket(eps(a), inner) * frac(1, 2 * b);
    }
  }
  LiftReport rep;
  NCPoly px = hain_phi(wc).x0.max_count(bc);
  rep.lhs = apply_derivation(d, px, wc, bc);
  SigmaC sg = sigma_c(n, 3, Normalization::Heretical);
  NCPoly sx0(Genus::G0);
  for (const auto& [r, f] : sg.value.comps) {
    if (!f.is_polynomial()) throw std::logic_error("lift check: polar component");
    MPoly y = unreduce(f.num()) * LinForm::diff(r + 1, 0, r).poly();
    sx0 += rho_inv(y, Genus::G0);
  }
  rep.rhs = phi_apply(sx0, wc, bc);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

Derivation pollack_combination(unsigned wc) {
  auto e = [&](int n) { return epsilon(n, wc).value; };
  return derivation_bracket(e(1), e(4)) - derivation_bracket(e(2), e(3)) * Rational(3);
}

}  // namespace mzv
