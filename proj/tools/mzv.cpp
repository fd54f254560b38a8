// Command-line front end.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mzv/serialize.hpp"

using namespace mzv;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Text };

struct Ctx {
  Format fmt = Format::Json;
  std::ostream& out = std::cout;
};

void emit(const Ctx& c, const json& j, const std::string& text) {
  if (c.fmt == Format::Json)
    c.out << j.dump(2) << "\n";
  else
    c.out << text;
}

std::string tuple_text(const DepthTuple& t) {
  std::ostringstream os;
  for (const auto& [r, f] : t.comps) os << "depth " << r << ": " << f.str(Frame::X) << "\n";
  if (t.comps.empty()) os << "0\n";
  return os.str();
}

int odd_weight_to_n(int w) {
  if (w < 3 || w % 2 == 0) throw Usage("--weight must be odd and >= 3");
  return (w - 1) / 2;
}

Normalization parse_norm(const std::string& s) {
  if (s == "canonical") return Normalization::Canonical;
  if (s == "heretical") return Normalization::Heretical;
  throw Usage("--normalization must be canonical or heretical");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto p = s.find(':');
  if (p == std::string::npos) throw Usage("--weight-range must look like A:B");
  try {
    int a = std::stoi(s.substr(0, p)), b = std::stoi(s.substr(p + 1));
    if (a > b) throw Usage("--weight-range: A must not exceed B");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Usage("--weight-range must look like A:B");
  }
}

std::vector<int> parse_composition(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  try {
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  } catch (const std::logic_error&) {
    throw Usage("--composition must be a comma-separated list of positive integers");
  }
  if (v.empty()) throw Usage("--composition is empty");
  for (int x : v)
    if (x < 1) throw Usage("--composition entries must be positive");
  return v;
}

// result of a verify verb
int report(const Ctx& c, const std::string& name, bool ok, json details) {
  json j = {{"check", name}, {"holds", ok}, {"details", std::move(details)}};
  std::ostringstream os;
  os << name << ": " << (ok ? "holds" : "FAILS") << "\n";
  emit(c, j, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with depth-graded motivic Lie algebra elements"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string fmt = "json";
  app.add_option("--format", fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

  int weight = 0, max_depth = 3, max_weight = 20, index = 0, depth = 2;
  std::string norm = "canonical", range, object, composition;
  bool even = false, elliptic = false, star = false;

  auto* sigma = app.add_subcommand("sigma", "canonical zeta element");
  sigma->add_option("--weight", weight)->required();
  sigma->add_option("--max-depth", max_depth)->check(CLI::Range(1, 4));
  sigma->add_option("--normalization", norm);

  auto* xi_cmd = app.add_subcommand("xi", "polar element xi");
  xi_cmd->add_option("--weight", weight)->required();
  xi_cmd->add_option("--max-depth", max_depth)->check(CLI::Range(1, 4));
  xi_cmd->add_option("--normalization", norm);

  auto* tau_cmd = app.add_subcommand("tau", "rational associator in depths <= 3");
  tau_cmd->add_option("--max-weight", max_weight)->required();
  tau_cmd->add_flag("--regularized", star, "print the stuffle-regularized version");

  auto* z3_cmd = app.add_subcommand("z3", "weight-3 polar witness");

  auto* eps_cmd = app.add_subcommand("epsilon", "genus-one derivation");
  eps_cmd->add_option("--index", index)->required();
  eps_cmd->add_option("--normalization", norm);

  auto* verify = app.add_subcommand("verify", "run a verification");
  verify->require_subcommand(1);
  auto* v_ds = verify->add_subcommand("ds", "double shuffle for sigma^c or tau");
  v_ds->add_option("--object", object)->check(CLI::IsMember({"sigma", "tau"}));
  v_ds->add_option("--weight", weight);
  v_ds->add_option("--max-weight", max_weight);
  auto* v_lift = verify->add_subcommand("lift", "sigma^c lifts to the epsilon expansion");
  v_lift->add_option("--weight", weight)->required();
  auto* v_pollack = verify->add_subcommand("pollack", "quadratic relations among epsilon brackets");
  v_pollack->add_option("--weight", weight)->required();
  auto* v_pole = verify->add_subcommand("polefree", "sigma^c has no poles in depth 3");
  v_pole->add_option("--weight", weight)->required();
  auto* v_chi = verify->add_subcommand("chi", "depth 1-3 chi equations");
  v_chi->add_option("--weight", weight)->required();
  auto* v_pls = verify->add_subcommand("pls", "epsilon brackets up to a weight are in pls");
  v_pls->add_option("--weight", weight)->required();

  auto* dims = app.add_subcommand("dims", "dimension tables");
  dims->require_subcommand(1);
  auto* d_ls = dims->add_subcommand("ls", "linearized double shuffle solutions");
  d_ls->add_option("--weight-range", range)->required();
  d_ls->add_option("--depth", depth)->check(CLI::Range(1, 3));
  auto* d_pp = dims->add_subcommand("periodpoly", "even period polynomials");
  d_pp->add_option("--weight-range", range)->required();
  auto* d_k = dims->add_subcommand("kernel", "kernel of the depth-2 bracket");
  d_k->add_option("--weight-range", range)->required();

  auto* pp = app.add_subcommand("periodpoly", "period polynomial basis");
  pp->add_option("--weight", weight)->required();
  pp->add_flag("--even", even);

  auto* cusp = app.add_subcommand("cuspidal", "depth-4 cuspidal elements");
  cusp->add_option("--weight", weight)->required();
  cusp->add_flag("--elliptic", elliptic, "also print the genus-one derivation");

  auto* coeff = app.add_subcommand("coeff", "coefficient extraction");
  coeff->add_option("--object", object)->required()->check(CLI::IsMember({"sigma", "tau"}));
  coeff->add_option("--weight", weight);
  coeff->add_option("--max-weight", max_weight);
  coeff->add_option("--composition", composition)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Ctx c;
  c.fmt = fmt == "text" ? Format::Text : Format::Json;

  try {
    if (*sigma) {
      int n = odd_weight_to_n(weight);
      Normalization nm = parse_norm(norm);
      SigmaC s = sigma_c(n, max_depth, nm);
      s.value.weight = weight;
      s.value.normalization = normalization_name(nm);
      json j = to_json(s.value);
      std::string text = tuple_text(s.value);
      if (s.witness && max_depth >= 3) {
        RatFn w = nm == Normalization::Canonical ? *s.witness : *s.witness * heretical_factor(n);
        j["polar_witness"] = component_to_json(3, w);
        text += "polar witness: " + w.str(Frame::X) + "\n";
      }
      emit(c, j, text);
      return 0;
    }
    if (*xi_cmd) {
      int n = odd_weight_to_n(weight);
      Normalization nm = parse_norm(norm);
      DepthTuple x = nm == Normalization::Canonical ? xi(n, max_depth) : xi_heretical(n, max_depth);
      x.weight = weight;
      x.normalization = normalization_name(nm);
      emit(c, to_json(x), tuple_text(x));
      return 0;
    }
    if (*tau_cmd) {
      if (max_weight < 2 || max_weight % 2) throw Usage("--max-weight must be even and >= 2");
      TauResult t = tau(max_weight);
      DepthTuple v = star ? tau_star(t) : t.tau;
      json j = to_json(v);
      j["max_weight"] = max_weight;
      j["warnings"] = t.warnings;
      emit(c, j, tuple_text(v));
      return 0;
    }
    if (*z3_cmd) {
      RatFn z = z3();
      emit(c, component_to_json(3, z), z.str(Frame::X) + "\n");
      return 0;
    }
    if (*eps_cmd) {
      if (index < 0 || index % 2) throw Usage("--index must be even and >= 0");
      int n = index / 2 - 1;
      EpsilonDerivation e = epsilon(n, index + 1, parse_norm(norm));
      DepthTuple l = ell_prime(e.value);
      json j = to_json(e.value);
      j["index"] = index;
      j["normalization"] = normalization_name(e.norm);
      j["ell_prime"] = to_json(l);
      emit(c, j, "a -> " + e.value.first.str() + "\nb -> " + e.value.second.str() + "\n");
      return 0;
    }
    if (*verify) {
      if (*v_ds) {
        if (object.empty() || object == "sigma") {
          int n = odd_weight_to_n(weight);
          SigmaC s = sigma_c(n, 3, Normalization::Canonical);
          json d = json::array();
          bool ok = true;
          for (int r = 2; r <= 3; ++r)
            for (const auto& rep : {shuffle_defect(s.value, r), stuffle_defect_mod_products(s.value, r)}) {
              ok = ok && rep.satisfied;
              d.push_back(to_json(rep));
            }
          return report(c, "ds sigma weight " + std::to_string(weight), ok, d);
        }
        if (max_weight < 2 || max_weight % 2) throw Usage("--max-weight must be even and >= 2");
        TauResult t = tau(max_weight);
        FullDSOptions o;
        o.max_weight = max_weight;
        json d = json::array();
        bool ok = true;
        for (int r = 2; r <= 3; ++r)
          for (Flavor f : {Flavor::FullShuffle, Flavor::FullStuffle}) {
            DefectReport rep = full_ds_defect(t.tau, r, f, o);
            ok = ok && rep.satisfied;
            d.push_back(to_json(rep));
          }
        for (int r = 1; r <= 3; ++r) ok = ok && t.tau.get(r).is_polynomial();
        return report(c, "ds tau max weight " + std::to_string(max_weight), ok, d);
      }
      if (*v_lift) {
        int n = odd_weight_to_n(weight);
        if (n < 2) throw Usage("lift: --weight must be >= 5");
        LiftReport r = lift_theorem_check(n, 2 * n + 5);
        return report(c, "lift weight " + std::to_string(weight), r.holds,
                      {{"difference", to_json(r.lhs - r.rhs)}});
      }
      if (*v_pollack) {
        if (weight < 4 || weight % 2) throw Usage("--weight must be even and >= 4");
        auto ks = kernel_K(weight);
        bool ok = true;
        json d = json::array();
        for (const auto& k : ks) {
          Derivation e = Derivation::zero(Genus::G1);
          for (const auto& [ij, l] : k.lambda)
            e = e + derivation_bracket(epsilon(ij.first, weight).value, epsilon(ij.second, weight).value) * l;
          ok = ok && e.is_zero();
          d.push_back({{"relation", to_json(k)}, {"residual", to_json(e)}});
        }
        return report(c, "epsilon quadratic relations weight " + std::to_string(weight), ok, d);
      }
      if (*v_pole) {
        int n = odd_weight_to_n(weight);
        PoleReport r = verify_polefree(sigma_c(n, 3, Normalization::Canonical).value);
        json d = json::array();
        for (const auto& p : r.poles)
          d.push_back({{"depth", p.depth}, {"form", p.form.str(Frame::X)}, {"order", p.order}});
        return report(c, "polefree sigma weight " + std::to_string(weight), r.pole_free, d);
      }
      if (*v_chi) {
        int n = odd_weight_to_n(weight);
        ChiReport r = chi_equations_check(n);
        return report(c, "chi equations weight " + std::to_string(weight), r.holds,
                      {{"residual", r.residual.str(Frame::Y)}});
      }
      if (*v_pls) {
        if (weight < 4) throw Usage("--weight must be >= 4");
        bool ok = true;
        json d = json::array();
        auto e = [&](int n) { return epsilon(n, weight + 2, Normalization::Heretical).value; };
        for (int a = 1; 2 * a + 2 <= weight; ++a)
          for (int b = a + 1; 2 * a + 2 * b + 4 <= weight; ++b) {
            bool m = pls_member(ell_prime(derivation_bracket(e(a), e(b))));
            ok = ok && m;
            d.push_back({{"bracket", {2 * a + 2, 2 * b + 2}}, {"pls", m}});
          }
        for (int a = 1; 2 * a + 2 <= weight; ++a)
          for (int b = 1; 2 * a + 2 * b + 2 <= weight; ++b) {
            bool m = pls_member(ell_prime(derivation_bracket(e(a), derivation_bracket(e(b), e(-1)))));
            ok = ok && m;
            d.push_back({{"bracket", {2 * a + 2, 2 * b + 2, 0}}, {"pls", m}});
          }
        return report(c, "pls membership of epsilon brackets", ok, d);
      }
    }
    if (*dims) {
      auto [a, b] = parse_range(range);
      json j = json::array();
      std::ostringstream os;
      for (int w = a; w <= b; ++w) {
        long v;
        if (*d_ls) {
          if (w < 1) continue;
          v = (long)ls_dimension(depth, w);
        } else if (*d_pp) {
          if (w < 2 || w % 2) continue;
          v = (long)period_poly_basis(w, true).size();
        } else {
          if (w < 4 || w % 2) continue;
          v = (long)kernel_K(w).size();
        }
        j.push_back({{"weight", w}, {"dimension", v}});
        os << w << " " << v << "\n";
      }
      emit(c, j, os.str());
      return 0;
    }
    if (*pp) {
      if (weight < 2 || weight % 2) throw Usage("--weight must be even and >= 2");
      json j = json::array();
      std::ostringstream os;
      for (const auto& p : period_poly_basis(weight, even)) {
        j.push_back(to_json(p));
        os << p.value.str(Frame::X) << "\n";
      }
      emit(c, j, os.str());
      return 0;
    }
    if (*cusp) {
      if (weight < 4 || weight % 2) throw Usage("--weight must be even and >= 4");
      json j = json::array();
      std::ostringstream os;
      for (const auto& k : kernel_K(weight)) {
        RatFn f = cuspidal_c(k);
        json e = {{"kernel", to_json(k)}, {"component", component_to_json(4, f)}};
        os << f.str(Frame::X) << "\n";
        if (elliptic) {
          KernelElement kl = underline_rescale(k);
          e["rescaled_kernel"] = to_json(kl);
          e["elliptic"] = to_json(elliptic_c(kl));
        }
        j.push_back(e);
      }
      emit(c, j, os.str());
      return 0;
    }
    if (*coeff) {
      std::vector<int> comp = parse_composition(composition);
      Rational v;
      if (object == "sigma") {
        int n = odd_weight_to_n(weight);
        v = sigma_coeff(n, comp);
      } else {
        if (max_weight < 2 || max_weight % 2) throw Usage("--max-weight must be even and >= 2");
        v = tau_coeff(tau(max_weight), comp);
      }
      emit(c, to_json(v), to_string(v) + "\n");
      return 0;
    }
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
