#include "doctest.h"
#include "mzv/ihara.hpp"

using namespace mzv;

namespace {
NCPoly W(const std::string& s) { return NCPoly::word(Genus::G0, Word::parse(s, Genus::G0)); }
const NCPoly x0 = NCPoly::letter(Genus::G0, 0);
const NCPoly x1 = NCPoly::letter(Genus::G0, 1);
RatFn xpow(int nv, int k, int e) { return RatFn(MPoly::var(nv, k).pow(e)); }
RatFn X(int nv, int k) { return RatFn::var(nv, k); }

std::vector<Word> words(unsigned len, unsigned depth) {
  std::vector<Word> out;
  for (std::uint64_t b = 0; b < (1ull << len); ++b) {
    Word w{b, len};
    if (w.count() == depth) out.push_back(w);
  }
  return out;
}
}  // namespace

TEST_CASE("circ on words") {
  CHECK(circ_words(x0 + W("01"), W("000")) == W("0000") + W("00001"));
  CHECK(circ_words(x1, x1) == W("11"));
  NCPoly p = W("011") - W("101") * 2;
  CHECK(bracket_words(p, p).is_zero());
}

TEST_CASE("oracle: rho of word circ equals rational circ") {
  // exhaustive over basis words of weight <= 10 with depth <= 3 in total
  int checked = 0;
  for (unsigned lp = 1; lp <= 5; ++lp)
    for (unsigned lq = 1; lp + lq <= 10; ++lq)
      for (unsigned r = 0; r <= 3 && r <= lp; ++r)
        for (unsigned s = 0; r + s <= 3 && s <= lq; ++s) {
          if (lp + lq > 7 && (lp + lq) % 3 != 0) continue;  // thin out the largest weights
          for (const Word& a : words(lp, r))
            for (const Word& b : words(lq, s)) {
              NCPoly p = NCPoly::word(Genus::G0, a), q = NCPoly::word(Genus::G0, b);
              MPoly lhs = rho(circ_words(p, q), r + s);
              RatFn rhs = circ_y(RatFn(rho(p, r)), RatFn(rho(q, s)));
              REQUIRE(RatFn(lhs) == rhs);
              ++checked;
            }
        }
  CHECK(checked > 1000);
}

TEST_CASE("rational circ basics") {
  RatFn f = RatFn(MPoly::var(3, 0) * MPoly::var(3, 2) - MPoly::var(3, 1).pow(2));
  RatFn y0 = X(1, 0);
  // f o y0 = y0 f
  CHECK(circ_y(f, y0) == f * X(3, 0).with_nv(3));
  CHECK(circ_y(f, RatFn::constant(2, 1)) - concat_y(f, RatFn::constant(2, 1)) == odot_y(f, RatFn::constant(2, 1)));
  // f odot y0 = (y0 - y_r) f
  RatFn fy = f.with_nv(3);
  CHECK(odot_y(f, y0) == fy * RatFn(MPoly::var(3, 0) - MPoly::var(3, 2)));
}

TEST_CASE("depth (1,1) bracket in the reduced frame") {
  RatFn f = xpow(1, 0, 2) + xpow(1, 0, 3) * 5, g = xpow(1, 0, 4) - RatFn::inv_var(1, 0);
  auto at = [](const RatFn& h, Rational a, Rational b) { return h.subst(2, {{a, b}}); };
  RatFn expect = at(f, 1, 0) * at(g, 0, 1) - at(g, 1, 0) * at(f, 0, 1) +
                 at(f, -1, 1) * (at(g, 1, 0) - at(g, 0, 1)) + (at(f, 0, 1) - at(f, 1, 0)) * at(g, -1, 1);
  CHECK(bracket(f, g) == expect);
}

TEST_CASE("x-frame and y-frame agree") {
  RatFn f = xpow(2, 0, 3) - X(2, 1) * xpow(2, 0, 1) + RatFn::inv_var(2, 1);
  RatFn g = xpow(1, 0, 2) + RatFn::inv_var(1, 0);
  CHECK(circ(f, g) == reduce_frame(circ_y(unreduce(f), unreduce(g))));
  CHECK(circ(g, f) == reduce_frame(circ_y(unreduce(g), unreduce(f))));
  CHECK(concat(f, g) == reduce_frame(concat_y(unreduce(f), unreduce(g))));
}

TEST_CASE("concatenation") {
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s) CHECK(concat_y(ell_r(r), ell_r(s)) == ell_r(r + s));
  RatFn a = xpow(1, 0, 2), b = X(2, 0) - X(2, 1) * 3, c = RatFn::inv_var(1, 0);
  CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
}

TEST_CASE("jacobi and odot identities") {
  RatFn f = xpow(1, 0, 2), g = xpow(1, 0, 4) + xpow(1, 0, 2) * 3, h = X(2, 0) * X(2, 1) - xpow(2, 1, 2);
  RatFn j = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
  CHECK(j.is_zero());
  // {f,g} odot y0 = f odot (g odot y0) - g odot (f odot y0), y-frame
  RatFn fy = unreduce(f), gy = unreduce(g), y0 = X(1, 0);
  CHECK(odot_y(bracket_y(fy, gy), y0) == odot_y(fy, odot_y(gy, y0)) - odot_y(gy, odot_y(fy, y0)));
  CHECK(odot_y(fy, RatFn::constant(1, 1)).is_zero());
  // associator symmetry A(a,b,c) = A(b,a,c)
  NCPoly p = W("01"), q = W("001") - W("110"), r = W("10");
  auto A = [](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return circ_words(a, circ_words(b, c)) - circ_words(circ_words(a, b), c);
  };
  CHECK(A(p, q, r) == A(q, p, r));
}

TEST_CASE("bracket agrees with derivation commutator") {
  NCPoly v = ad_pow(x0, 2, x1), w = lie_bracket(x1, lie_bracket(x0, x1));
  auto delta = [&](const NCPoly& u) {
    return Derivation(Genus::G0, lie_bracket(x0, u), NCPoly(Genus::G0), Annihilates::Second);
  };
  Derivation c = derivation_bracket(delta(v), delta(w));
  CHECK(c.first == lie_bracket(x0, bracket_words(v, w)));
  // rho' is a morphism of Lie algebras
  Derivation dv(Genus::G0, v, NCPoly(Genus::G0), Annihilates::Second);
  Derivation dw(Genus::G0, w, NCPoly(Genus::G0), Annihilates::Second);
  DepthTuple lhs = rho_prime(derivation_bracket(dv, dw));
  CHECK(lhs == bracket(rho_prime(dv), rho_prime(dw), 4));
}

TEST_CASE("star product") {
  RatFn f = xpow(1, 0, 2), one = RatFn::constant(1, 1), g = xpow(1, 0, 3) + RatFn::inv_var(1, 0);
  CHECK(star_product(one, g).is_zero());
  RatFn ff = star_product(f, f);
  CHECK(ff.rename(2, {1, 0}) == -ff);
  auto at = [](const RatFn& h, Rational a, Rational b) { return h.subst(2, {{a, b}}); };
  CHECK_THROWS(star_product(xpow(1, 0, 1), f));
  // (x h) * h for odd h
  RatFn h = xpow(1, 0, 3) * 2 + RatFn::inv_var(1, 0);
  RatFn d = at(RatFn::var(1, 0), 1, -1);
  RatFn expect = d * (at(h, 1, 0) * at(h, 0, 1) - at(h, 1, 0) * at(h, -1, 1) + at(h, 0, 1) * at(h, -1, 1));
  CHECK(star_product(xpow(1, 0, 1) * h, h) == expect);
}

TEST_CASE("exp_ad truncation") {
  DepthTuple s;
  s.set(1, RatFn::inv_var(1, 0) * Rational(1, 2));
  DepthTuple t;
  t.set(1, xpow(1, 0, 2));
  CHECK(exp_ad(s, t, 1) == t);
  DepthTuple e = exp_ad(s, t, 3);
  CHECK(e.get(2) == bracket(s.get(1), t.get(1)));
  CHECK_THROWS(exp_ad(s, t, 5));
}

TEST_CASE("corollary on delta_x1") {
  CHECK(dx1_identity_check(ad_pow(x0, 2, x1)));
  CHECK(dx1_identity_check(lie_bracket(x1, lie_bracket(x0, x1))));
  CHECK(dx1_identity_check(ad_pow(x0, 4, x1)));
  CHECK_THROWS(dx1_identity_check(W("01")));
}
