#include "doctest.h"
#include "mzv/dshuffle.hpp"
#include "mzv/elliptic.hpp"

using namespace mzv;

namespace {
const Genus G1 = Genus::G1;
NCPoly A() { return NCPoly::letter(G1, 0); }
NCPoly B() { return NCPoly::letter(G1, 1); }
NCPoly P1(const char* s) { return NCPoly::word(G1, Word::parse(s, G1)); }
}  // namespace

TEST_CASE("epsilon generators") {
  auto e0 = epsilon(-1, 1);
  CHECK(e0.value.first == B());
  CHECK(e0.value.second.is_zero());
  auto e4 = epsilon(1, 5);
  CHECK(e4.value.first == ad_pow(A(), 4, B()));
  for (int n = 0; n <= 5; ++n) {
    Derivation d = epsilon(n, 2 * n + 3).value;
    CHECK(apply_derivation(d, lie_bracket(A(), B())).is_zero());
    CHECK(d.second.coeff(Word::letter(0)) == 0);
    CHECK(is_lie(d.second));
    DepthTuple l = ell_prime(d);
    CHECK(l.comps.size() == 1);
    CHECK(l.get(1) == x1_power(2 * n));
  }
  CHECK(ell_prime(e0.value).get(1) == x1_power(-2));
  // eps2 = ad(a)^2 b on a, [b,[a,b]]... determined by [a, eps2(b)] = -[eps2(a), b]
  auto e2 = epsilon(0, 3).value;
  CHECK(lie_bracket(A(), e2.second) == -lie_bracket(e2.first, B()));
  CHECK_THROWS(epsilon(2, 6));
  CHECK_THROWS(epsilon(-2, 10));
}

TEST_CASE("eps2 is central") {
  Derivation e2 = epsilon(0, 3).value;
  for (int n = -1; n <= 4; ++n) CHECK(derivation_bracket(e2, epsilon(n, 20).value).is_zero());
}

TEST_CASE("heretical scaling") {
  CHECK(epsilon(-1, 1, Normalization::Heretical).value.first == B() * frac(1, 12));
  auto h = epsilon(2, 7, Normalization::Heretical).value;
  CHECK(h.first == ad_pow(A(), 6, B()) * frac(-1, 720));
}

TEST_CASE("solve ad(a)") {
  NCPoly x = lie_bracket(P1("ab"), B()) + P1("bab");
  CHECK(solve_ad_a(lie_bracket(A(), x)) == x);
  CHECK_THROWS(solve_ad_a(P1("b")));
  CHECK_THROWS(solve_ad_a(P1("bb")));
}

TEST_CASE("phi") {
  PhiImage p = hain_phi(3);
  NCPoly ba = lie_bracket(B(), A());
  CHECK(p.x0 == A() - ba * frac(1, 2) + lie_bracket(B(), ba) * frac(1, 12));
  PhiImage q = hain_phi(5);
  CHECK(q.x0.by_weight(5) == ad_pow(B(), 4, A()) * frac(-1, 720));
  NCPoly x1 = NCPoly::letter(Genus::G0, 1);
  CHECK(phi_apply(x1, 10) == lie_bracket(A(), B()));
  NCPoly x0 = NCPoly::letter(Genus::G0, 0);
  CHECK(phi_apply(x0, 4) == hain_phi(4).x0);
  // multiplicative
  NCPoly w = NCPoly::word(Genus::G0, Word::parse("01", Genus::G0));
  CHECK(phi_apply(w, 6) == concat(hain_phi(6).x0, lie_bracket(A(), B())).max_weight(6));
  // phi maps depth r into B^r
  NCPoly x0_ = NCPoly::letter(Genus::G0, 0);
  NCPoly l = bracket_words(ad_pow(x0_, 2, x1), ad_pow(x0_, 1, x1));
  CHECK(in_B(phi_apply(l, 10), 2));
}

TEST_CASE("phi0") {
  NCPoly x0 = NCPoly::letter(Genus::G0, 0), x1 = NCPoly::letter(Genus::G0, 1);
  CHECK(phi_zero(x1) == lie_bracket(A(), B()));
  CHECK(phi_zero_check(x1));
  CHECK(phi_zero_check(ad_pow(x0, 2, x1)));
  CHECK(phi_zero_check(lie_bracket(ad_pow(x0, 3, x1), ad_pow(x0, 1, x1))));
  CHECK(phi_zero_check(lie_bracket(x1, lie_bracket(ad_pow(x0, 2, x1), x1))));
  CHECK(phi_zero_check(lie_bracket(ad_pow(x0, 4, x1), ad_pow(x0, 5, x1))));
}

TEST_CASE("B-degree") {
  for (int n = 0; n <= 3; ++n) {
    auto r = b_degree_predicates(epsilon(n, 10).value, 1, 12);
    CHECK(r.derivation);
    CHECK(r.consistent());
    auto r2 = b_degree_predicates(epsilon(n, 10).value, 2, 12);
    CHECK(!r2.derivation);
    CHECK(r2.consistent());
  }
  Derivation e0 = epsilon(-1, 1).value;
  // eps0(a) = b
  auto z = b_degree_predicates(e0, 0, 8);
  CHECK(z.derivation);
  CHECK(z.consistent());
  auto o = b_degree_predicates(e0, 1, 8);
  CHECK(o.derivation);
  CHECK(o.consistent());
  CHECK(!b_degree_predicates(e0, 2, 8).derivation);
  auto t = derivation_bracket(epsilon(1, 5, Normalization::Heretical).value,
                              derivation_bracket(epsilon(2, 7, Normalization::Heretical).value,
                                                 epsilon(-1, 1, Normalization::Heretical).value));
  auto rt = b_degree_predicates(t, 2, 14);
  CHECK(rt.derivation);
  CHECK(rt.consistent());
}

TEST_CASE("chi equations") {
  for (int n = 2; n <= 4; ++n) CHECK(chi_equations_check(n).holds);
  for (int n = 3; n <= 4; ++n) {
    RatFn bump(MPoly::monomial(3, {2, 2, 2 * n - 6}));
    auto r = chi_equations_check(n, &bump);
    CHECK(!r.holds);
  }
}

TEST_CASE("lift theorem") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(lift_theorem_check(n, 2 * n + 5).holds);
    CHECK(!lift_theorem_check(n, 2 * n + 5, false).holds);
  }
}

TEST_CASE("brackets of epsilons") {
  auto e = [](int n) { return epsilon(n, 30, Normalization::Heretical).value; };
  // ell' is a Lie homomorphism on B^1
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; a + b <= 6; ++b) {
      Derivation br = derivation_bracket(e(a), e(b));
      CHECK(ell_prime(br) == bracket(ell_prime(e(a)), ell_prime(e(b)), 4));
    }
  // brackets land in pls
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; 2 * a + 2 * b + 4 <= 14; ++b) {
      DepthTuple l = ell_prime(derivation_bracket(e(a), e(b)));
      CHECK(linearized_defect(l, 2).satisfied);
      CHECK(shuffle_defect(l, 2).satisfied);
    }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; 2 * a + 2 * b + 2 <= 14; ++b) {
      DepthTuple l = ell_prime(derivation_bracket(e(a), derivation_bracket(e(b), e(-1))));
      for (int d = 2; d <= 3; ++d) {
        CHECK(linearized_defect(l, d).satisfied);
        CHECK(shuffle_defect(l, d).satisfied);
      }
    }
}

TEST_CASE("Pollack relation") {
  Derivation p = pollack_combination(20);
  CHECK(p.first.is_zero());
  CHECK(p.second.is_zero());
  auto e = [](int n) { return epsilon(n, 30).value; };
  CHECK(!derivation_bracket(e(1), e(4)).is_zero());
}
