#include "mzv/ihara.hpp"

#include <stdexcept>

namespace mzv {

namespace {

using Img = std::vector<std::vector<Rational>>;

Img zero_img(int from, int to) { return Img(from, std::vector<Rational>(to)); }

void append_scaled(NCPoly& out, const NCPoly& p, const Word& pre, const Word& post, const Rational& c) {
  for (const auto& [w, a] : p.terms()) out.add_term(pre + w + post, a * c);
}

}  // namespace

NCPoly circ_words(const NCPoly& p, const NCPoly& q) {
  if (p.genus() != Genus::G0 || q.genus() != Genus::G0) throw std::invalid_argument("circ: genus 0 only");
  NCPoly ps = star(p);
  NCPoly out(Genus::G0);
  const Word x1 = Word::letter(1);
  for (const auto& [w, c] : q.terms()) {
    Word prefix;
    std::uint32_t pos = 0;
    while (true) {
      std::uint32_t n = 0;
      while (pos + n < w.len && w.at(pos + n) == 0) ++n;
      Word zeros = w.sub(pos, n);
      if (pos + n == w.len) {
        append_scaled(out, p, prefix + zeros, Word(), c);
        break;
      }
      Word rest = w.sub(pos + n + 1, w.len - pos - n - 1);
      append_scaled(out, p, prefix + zeros, x1 + rest, c);
      append_scaled(out, ps, prefix + zeros + x1, rest, c);
      prefix = prefix + zeros + x1;
      pos += n + 1;
    }
  }
  return out;
}

NCPoly bracket_words(const NCPoly& p, const NCPoly& q) { return circ_words(p, q) - circ_words(q, p); }

RatFn circ_y(const RatFn& f, const RatFn& g) {
  int r = f.nv() - 1, s = g.nv() - 1;
  if (r < 0 || s < 0) throw std::invalid_argument("circ: empty frame");
  int nv = r + s + 1;
  std::vector<RatFn> terms;
  for (int i = 0; i <= s; ++i) {
    std::vector<int> fm(r + 1), gm(s + 1);
    for (int k = 0; k <= r; ++k) fm[k] = i + k;
    for (int j = 0; j <= s; ++j) gm[j] = j <= i ? j : j + r;
    terms.push_back(f.rename(nv, fm) * g.rename(nv, gm));
  }
  Rational sign = (r % 2) ? -1 : 1;
  for (int i = 1; i <= s; ++i) {
    Img fi = zero_img(r + 1, nv);
    for (int k = 0; k <= r; ++k) fi[k][i + r - k] = -1;
    std::vector<int> gm(s + 1);
    for (int j = 0; j <= s; ++j) gm[j] = j <= i - 1 ? j : j + r;
    terms.push_back(f.subst(nv, fi) * g.rename(nv, gm) * sign);
  }
  return sum(terms, nv);
}

RatFn concat_y(const RatFn& f, const RatFn& g) {
  int r = f.nv() - 1, s = g.nv() - 1;
  int nv = r + s + 1;
  std::vector<int> fm(r + 1), gm(s + 1);
  for (int k = 0; k <= r; ++k) fm[k] = k;
  for (int j = 0; j <= s; ++j) gm[j] = r + j;
  return f.rename(nv, fm) * g.rename(nv, gm);
}

RatFn bracket_y(const RatFn& f, const RatFn& g) { return circ_y(f, g) - circ_y(g, f); }
RatFn odot_y(const RatFn& f, const RatFn& g) { return circ_y(f, g) - concat_y(f, g); }

// x-frame: x0 = 0 is implicit, variable k of the output frame is x_{k+1}
RatFn circ(const RatFn& f, const RatFn& g) {
  int r = f.nv(), s = g.nv();
  int nv = r + s;
  auto X = [](Img& m, int row, int idx, const Rational& c) {
    if (idx > 0) m[row][idx - 1] += c;
  };
  std::vector<RatFn> terms;
  for (int i = 0; i <= s; ++i) {
    Img fi = zero_img(r, nv), gi = zero_img(s, nv);
    for (int k = 1; k <= r; ++k) {
      X(fi, k - 1, i + k, 1);
      X(fi, k - 1, i, -1);
    }
    for (int j = 1; j <= s; ++j) X(gi, j - 1, j <= i ? j : j + r, 1);
    terms.push_back(f.subst(nv, fi) * g.subst(nv, gi));
  }
  Rational sign = (r % 2) ? -1 : 1;
  for (int i = 1; i <= s; ++i) {
    Img fi = zero_img(r, nv), gi = zero_img(s, nv);
    for (int k = 1; k <= r; ++k) {
      X(fi, k - 1, i + r, 1);
      X(fi, k - 1, i + r - k, -1);
    }
    for (int j = 1; j <= s; ++j) X(gi, j - 1, j <= i - 1 ? j : j + r, 1);
    terms.push_back(f.subst(nv, fi) * g.subst(nv, gi) * sign);
  }
  return sum(terms, nv);
}

RatFn concat(const RatFn& f, const RatFn& g) {
  int r = f.nv(), s = g.nv();
  int nv = r + s;
  Img fi = zero_img(r, nv), gi = zero_img(s, nv);
  for (int k = 0; k < r; ++k) fi[k][k] = 1;
  for (int j = 0; j < s; ++j) {
    gi[j][r + j] = 1;
    if (r > 0) gi[j][r - 1] -= 1;
  }
  return f.subst(nv, fi) * g.subst(nv, gi);
}

RatFn bracket(const RatFn& f, const RatFn& g) { return circ(f, g) - circ(g, f); }
RatFn odot(const RatFn& f, const RatFn& g) { return circ(f, g) - concat(f, g); }

RatFn star_product(const RatFn& f, const RatFn& g) {
  if (f.nv() != 1 || g.nv() != 1) throw std::invalid_argument("star product: one-variable inputs");
  if (f.negate_vars() != f) throw std::invalid_argument("star product: f must be even");
  auto at = [](const RatFn& h, Rational a1, Rational a2) { return h.subst(2, {{a1, a2}}); };
  RatFn f1 = at(f, 1, 0), f2 = at(f, 0, 1), f21 = at(f, -1, 1);
  RatFn g1 = at(g, 1, 0), g2 = at(g, 0, 1);
  return sum({f1 * g2, -(f21 * g2), f21 * g1, -(f2 * g1)}, 2);
}

DepthTuple bracket(const DepthTuple& a, const DepthTuple& b, int max_depth) {
  DepthTuple out;
  for (const auto& [r, f] : a.comps)
    for (const auto& [s, g] : b.comps) {
      if (r + s > max_depth) continue;
      out.set(r + s, out.get(r + s) + bracket(f, g));
    }
  return out;
}

DepthTuple circ(const DepthTuple& a, const DepthTuple& b, int max_depth) {
  DepthTuple out;
  for (const auto& [r, f] : a.comps)
    for (const auto& [s, g] : b.comps) {
      if (r + s > max_depth) continue;
      out.set(r + s, out.get(r + s) + circ(f, g));
    }
  return out;
}

DepthTuple exp_ad(const DepthTuple& s, const DepthTuple& t, int max_depth) {
  if (max_depth > 4) throw std::invalid_argument("exp_ad: depth cutoff above 4");
  DepthTuple out = t.truncated(max_depth);
  DepthTuple term = out;
  Rational fact = 1;
  for (int k = 1; k < max_depth; ++k) {
    term = bracket(s, term, max_depth);
    if (term.comps.empty()) break;
    fact *= k;
    out = out + term * (1 / fact);
  }
  return out;
}

bool dx1_identity_check(const NCPoly& w) {
  unsigned r;
  if (!w.homogeneous_count(&r) || r == 0) throw std::invalid_argument("dx1 check: homogeneous depth >= 1 required");
  unsigned wt;
  if (!w.homogeneous_weight(&wt) || !is_lie(w)) throw std::invalid_argument("dx1 check: Lie element required");
  // delta_{x1}: x0 -> x1, x1 -> 0
  Derivation d(Genus::G0, NCPoly::letter(Genus::G0, 1), NCPoly(Genus::G0), Annihilates::Second);
  NCPoly lhs_w = apply_derivation(d, w);
  RatFn lhs = RatFn(reduce_frame(rho(lhs_w, r + 1)));
  RatFn f = RatFn(reduce_frame(rho(w, r)));
  int R = (int)r;
  RatFn inner = bracket(f * RatFn::inv_var(R, R - 1), RatFn::inv_var(1, 0));
  RatFn rhs = inner * RatFn::var(R + 1, R);
  return lhs == rhs;
}

}  // namespace mzv
