#include "mzv/serialize.hpp"

#include <stdexcept>

namespace mzv {

namespace {

const char* genus_name(Genus g) { return g == Genus::G0 ? "x0x1" : "ab"; }

Genus genus_from_name(const std::string& s) {
  if (s == "x0x1") return Genus::G0;
  if (s == "ab") return Genus::G1;
  throw std::invalid_argument("unknown alphabet '" + s + "'");
}

Flavor flavor_from_name(const std::string& s) {
  for (Flavor f : {Flavor::Shuffle, Flavor::StuffleModProducts, Flavor::LinearizedStuffle, Flavor::FullShuffle,
                   Flavor::FullStuffle})
    if (flavor_name(f) == s) return f;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

json to_json(const NCPoly& p) {
  json a = json::array();
  for (const auto& [w, c] : p.terms()) a.push_back({w.str(p.genus()), to_string(c)});
  return a;
}

NCPoly ncpoly_from_json(const json& j, Genus g) {
  for (const auto& t : j) {
    const std::string& w = t.at(0).get_ref<const std::string&>();
    if (w.find_first_of("ab") != std::string::npos) g = Genus::G1;
    if (w.find_first_of("01") != std::string::npos) g = Genus::G0;
  }
  NCPoly p(g);
  for (const auto& t : j) p.add_term(Word::parse(t.at(0).get<std::string>(), g), rational_from_json(t.at(1)));
  return p;
}

json component_to_json(int depth, const RatFn& f) {
  if (f.nv() != depth) throw std::invalid_argument("component: variable count differs from depth");
  json num = json::array();
  for (const auto& [m, c] : f.num().terms()) {
    json e = json::array();
    for (int k = 0; k < depth; ++k) e.push_back(mono_exp(m, k));
    num.push_back({e, to_string(c)});
  }
  json den = json::array();
  for (const auto& [l, mult] : f.den())
    for (int i = 0; i < mult; ++i) den.push_back(l.str(Frame::X));
  return {{"depth", depth}, {"numerator", num}, {"denominator", den}};
}

std::pair<int, RatFn> component_from_json(const json& j) {
  int r = j.at("depth").get<int>();
  if (r < 1) throw std::invalid_argument("component: depth >= 1 required");
  std::vector<MPoly::Term> ts;
  for (const auto& t : j.at("numerator")) {
    auto e = t.at(0).get<std::vector<int>>();
    if ((int)e.size() != r) throw std::invalid_argument("component: exponent vector length");
    ts.emplace_back(mono_make(e), rational_from_json(t.at(1)));
  }
  RatFn f(MPoly::from_terms(r, ts));
  Rational scale = 1;
  for (const auto& s : j.at("denominator")) {
    Rational sc;
    LinForm l = parse_linform(s.get<std::string>(), r, Frame::X, &sc);
    f = f.div_form(l);
    scale *= sc;
  }
  return {r, f * (Rational(1) / scale)};
}

json to_json(const DepthTuple& t) {
  json c = json::array();
  for (const auto& [r, f] : t.comps) c.push_back(component_to_json(r, f));
  json o;
  o["weight"] = t.weight ? json(*t.weight) : json(nullptr);
  o["normalization"] = t.normalization;
  o["components"] = c;
  return o;
}

DepthTuple depth_tuple_from_json(const json& j) {
  DepthTuple t;
  if (j.contains("weight") && !j.at("weight").is_null()) t.weight = j.at("weight").get<int>();
  if (j.contains("normalization")) t.normalization = j.at("normalization").get<std::string>();
  for (const auto& c : j.at("components")) {
    auto [r, f] = component_from_json(c);
    t.set(r, f);
  }
  return t;
}

json to_json(const Derivation& d) {
  return {{"alphabet", genus_name(d.genus)}, {"first", to_json(d.first)}, {"second", to_json(d.second)}};
}

Derivation derivation_from_json(const json& j) {
  Genus g = genus_from_name(j.at("alphabet").get<std::string>());
  return Derivation(g, ncpoly_from_json(j.at("first"), g), ncpoly_from_json(j.at("second"), g));
}

json to_json(const DefectReport& r) {
  return {{"flavor", flavor_name(r.flavor)},
          {"depth", r.depth},
          {"satisfied", r.satisfied},
          {"residual", component_to_json(r.residual.nv(), r.residual)}};
}

DefectReport defect_report_from_json(const json& j) {
  DefectReport r{flavor_from_name(j.at("flavor").get<std::string>()), j.at("depth").get<int>(), RatFn(),
                 j.at("satisfied").get<bool>()};
  r.residual = component_from_json(j.at("residual")).second;
  return r;
}

json to_json(const PeriodPolynomial& p) {
  int d = p.weight - 2;
  json c = json::array();
  for (int k = d; k >= 0; --k) c.push_back(to_string(p.value.coeff({k, d - k})));
  return {{"weight", p.weight}, {"coefficients", c}};
}

PeriodPolynomial period_polynomial_from_json(const json& j) {
  PeriodPolynomial p;
  p.weight = j.at("weight").get<int>();
  int d = p.weight - 2;
  const json& c = j.at("coefficients");
  if ((int)c.size() != d + 1) throw std::invalid_argument("period polynomial: coefficient count");
  std::vector<MPoly::Term> ts;
  for (int i = 0; i <= d; ++i) ts.emplace_back(mono_make({d - i, i}), rational_from_json(c.at(i)));
  p.value = MPoly::from_terms(2, ts);
  return p;
}

json to_json(const KernelElement& k) {
  json l = json::array();
  for (const auto& [ij, c] : k.lambda) l.push_back({ij.first, ij.second, to_string(c)});
  return {{"weight", k.weight}, {"lambda", l}};
}

KernelElement kernel_element_from_json(const json& j) {
  KernelElement k;
  k.weight = j.at("weight").get<int>();
  for (const auto& t : j.at("lambda")) {
    int i = t.at(0).get<int>(), jj = t.at(1).get<int>();
    Rational c = rational_from_json(t.at(2));
    if (i == jj) throw std::invalid_argument("kernel element: diagonal entry");
    if (i > jj) {
      std::swap(i, jj);
      c = -c;
    }
    if (c != 0) k.lambda[{i, jj}] = c;
  }
  return k;
}

}  // namespace mzv
