#include "doctest.h"
#include "mzv/serialize.hpp"

using namespace mzv;

TEST_CASE("rationals") {
  CHECK(to_json(frac(-3, 6)) == "-1/2");
  CHECK(to_json(Rational(7)) == "7");
  CHECK(rational_from_json(json("5/10")) == frac(1, 2));
  CHECK(rational_from_json(json(4)) == 4);
}

TEST_CASE("noncommutative polynomials") {
  NCPoly p = NCPoly::word(Genus::G0, Word::parse("01", Genus::G0), frac(1, 3)) -
             NCPoly::word(Genus::G0, Word::parse("10", Genus::G0));
  json j = to_json(p);
  CHECK(j.dump() == R"([["01","1/3"],["10","-1"]])");
  CHECK(ncpoly_from_json(j) == p);
  NCPoly q = epsilon(1, 5).value.second;
  CHECK(ncpoly_from_json(to_json(q)) == q);
  CHECK(ncpoly_from_json(json::array(), Genus::G1).genus() == Genus::G1);
}

TEST_CASE("depth tuples") {
  SigmaC s = sigma_c(3, 3, Normalization::Canonical);
  s.value.weight = 7;
  s.value.normalization = "canonical";
  json j = to_json(s.value);
  CHECK(j["weight"] == 7);
  CHECK(j["components"][0]["depth"] == 1);
  CHECK(j["components"][0]["numerator"].dump() == R"([[[6],"1"]])");
  CHECK(depth_tuple_from_json(j) == s.value);
  DepthTuple x = xi(2, 3);
  json jx = to_json(x);
  CHECK(to_json(DepthTuple{})["weight"].is_null());
  DepthTuple back = depth_tuple_from_json(jx);
  CHECK(back == x);
  CHECK(back.get(3) == x.get(3));
  DepthTuple st = s_elements();
  CHECK(depth_tuple_from_json(json::parse(to_json(st).dump())) == st);
  json hand = {{"components", {{{"depth", 1}, {"numerator", {{{0}, "1/2"}}}, {"denominator", {"x1"}}}}}};
  CHECK(depth_tuple_from_json(hand).get(1) == RatFn::inv_var(1, 0) * frac(1, 2));
}

TEST_CASE("derivations and reports") {
  Derivation d = epsilon(2, 7).value;
  Derivation e = derivation_from_json(to_json(d));
  CHECK(e.first == d.first);
  CHECK(e.second == d.second);
  CHECK(e.genus == Genus::G1);
  DepthTuple t;
  t.set(2, RatFn(MPoly::var(2, 0) * MPoly::var(2, 1)));
  DefectReport r = shuffle_defect(t, 2);
  DefectReport r2 = defect_report_from_json(to_json(r));
  CHECK(r2.flavor == r.flavor);
  CHECK(r2.depth == 2);
  CHECK(r2.satisfied == r.satisfied);
  CHECK(r2.residual == r.residual);
}

TEST_CASE("period polynomials and kernel elements") {
  PeriodPolynomial p = period_poly_basis(12, true)[0];
  json j = to_json(p);
  CHECK(j["coefficients"].size() == 11);
  CHECK(j["coefficients"][2] == "1");
  CHECK(period_polynomial_from_json(j).value == p.value);
  KernelElement k = kernel_K(12)[0];
  json jk = to_json(k);
  CHECK(jk["lambda"].dump() == R"([[1,4,"1"],[2,3,"-3"]])");
  CHECK(kernel_element_from_json(jk).lambda == k.lambda);
  json rev = {{"weight", 12}, {"lambda", {{4, 1, "-1"}, {3, 2, "3"}}}};
  CHECK(kernel_element_from_json(rev).lambda == k.lambda);
}
