#include "mzv/dshuffle.hpp"

#include <functional>
#include <stdexcept>

namespace mzv {

namespace {

using Img = std::vector<std::vector<Rational>>;

// evaluate f (nv = rows of img) at linear combinations of x1..x_nv
RatFn at(const RatFn& f, int nv, Img img) {
  if ((int)img.size() != f.nv()) throw std::invalid_argument("argument count");
  for (auto& row : img) row.resize(nv);
  return f.subst(nv, img);
}

// x-frame arguments written as coefficient rows
std::vector<Rational> X(int nv, std::initializer_list<int> idx) {
  std::vector<Rational> r(nv);
  for (int i : idx) r[i - 1] += 1;
  return r;
}

void need_nv(const RatFn& f, int r) {
  if (f.nv() != r) throw std::invalid_argument("component has wrong number of variables");
}

DefectReport report(Flavor fl, int depth, RatFn res) {
  bool ok = res.is_zero();
  return DefectReport{fl, depth, std::move(res), ok};
}

RatFn diff_quotient(const RatFn& num, const LinForm& den, Rational sign) {
  return num.div_form(den) * sign;
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Shuffle: return "shuffle";
    case Flavor::StuffleModProducts: return "stuffle_mod_products";
    case Flavor::LinearizedStuffle: return "linearized_stuffle";
    case Flavor::FullShuffle: return "full_shuffle";
    case Flavor::FullStuffle: return "full_stuffle";
  }
  return "";
}

RatFn shuffle_residual(const RatFn& f) {
  int r = f.nv();
  if (r == 2) return sum({at(f, 2, {X(2, {1}), X(2, {1, 2})}), at(f, 2, {X(2, {2}), X(2, {1, 2})})}, 2);
  if (r == 3)
    return sum({at(f, 3, {X(3, {1}), X(3, {1, 2}), X(3, {1, 2, 3})}),
                at(f, 3, {X(3, {2}), X(3, {1, 2}), X(3, {1, 2, 3})}),
                at(f, 3, {X(3, {2}), X(3, {2, 3}), X(3, {1, 2, 3})})},
               3);
  throw std::invalid_argument("shuffle equations: depth 2 or 3");
}

RatFn linearized_stuffle_residual(const RatFn& f) {
  int r = f.nv();
  if (r == 1) return f - f.negate_vars();
  if (r == 2) return f + f.rename(2, {1, 0});
  if (r == 3) return sum({f, f.rename(3, {1, 0, 2}), f.rename(3, {1, 2, 0})}, 3);
  throw std::invalid_argument("linearized stuffle: depth 1..3");
}

DefectReport shuffle_defect(const DepthTuple& t, int depth) {
  RatFn f = t.get(depth);
  need_nv(f, depth);
  return report(Flavor::Shuffle, depth, shuffle_residual(f));
}

namespace {
RatFn stuffle_rhs(const RatFn& f1, const RatFn& f2, int depth) {
  if (depth == 2) {
    need_nv(f1, 1);
    // (f1(x1) - f1(x2)) / (x2 - x1)
    RatFn num = f1.rename(2, {0}) - f1.rename(2, {1});
    return diff_quotient(num, LinForm::diff(2, 0, 1), -1);
  }
  need_nv(f2, 2);
  // (f2(x2,x1) - f2(x2,x3))/(x3-x1) + (f2(x1,x3) - f2(x2,x3))/(x2-x1)
  RatFn a = f2.rename(3, {1, 0}) - f2.rename(3, {1, 2});
  RatFn b = f2.rename(3, {0, 2}) - f2.rename(3, {1, 2});
  return diff_quotient(a, LinForm::diff(3, 0, 2), -1) + diff_quotient(b, LinForm::diff(3, 0, 1), -1);
}

void check_quotient(const RatFn& q, const RatFn& a, const RatFn& b) {
  if (a.is_polynomial() && b.is_polynomial() && !q.is_polynomial())
    throw std::domain_error("difference quotient does not divide exactly");
}
}  // namespace

DefectReport stuffle_defect_mod_products(const DepthTuple& t, int depth) {
  if (depth != 2 && depth != 3) throw std::invalid_argument("stuffle equations: depth 2 or 3");
  RatFn f = t.get(depth);
  need_nv(f, depth);
  RatFn lower = t.get(depth - 1);
  if (lower.is_zero()) lower = RatFn(depth - 1);
  RatFn rhs = depth == 2 ? stuffle_rhs(lower, RatFn(), 2) : stuffle_rhs(RatFn(), lower, 3);
  check_quotient(rhs, lower, lower);
  return report(Flavor::StuffleModProducts, depth, linearized_stuffle_residual(f) - rhs);
}

DefectReport linearized_defect(const DepthTuple& t, int depth) {
  RatFn f = t.get(depth);
  need_nv(f, depth);
  return report(Flavor::LinearizedStuffle, depth, linearized_stuffle_residual(f));
}

RatFn stuffle_regularized(const DepthTuple& t, int depth) {
  RatFn f = t.get(depth);
  if (depth == 1) return f;
  if (depth == 2) return f + RatFn::constant(2, frac(1, 48));
  if (depth == 3) return f + t.get(1).rename(3, {0}) * frac(1, 48);
  throw std::invalid_argument("regularization: depth 1..3");
}

DefectReport full_ds_defect(const DepthTuple& t, int depth, Flavor flavor, const FullDSOptions& opts) {
  if (depth != 2 && depth != 3) throw std::invalid_argument("full double shuffle: depth 2 or 3");
  if (opts.max_weight < depth) throw std::invalid_argument("truncation window below the requested depth");
  RatFn f1 = t.get(1), f2 = t.get(2);
  if (f1.is_zero()) f1 = RatFn(1);
  if (f2.is_zero()) f2 = RatFn(2);
  RatFn res(depth);
  if (flavor == Flavor::FullShuffle) {
    RatFn f = t.get(depth);
    if (f.is_zero()) f = RatFn(depth);
    RatFn lhs = shuffle_residual(f);
    RatFn prod = depth == 2 ? f1.rename(2, {0}) * f1.rename(2, {1})
                            : f1.rename(3, {0}) * at(f2, 3, {X(3, {2}), X(3, {2, 3})});
    res = lhs - prod;
  } else if (flavor == Flavor::FullStuffle) {
    RatFn s2 = stuffle_regularized(t, 2);
    RatFn lhs = linearized_stuffle_residual(depth == 2 ? s2 : stuffle_regularized(t, 3));
    RatFn rhs = depth == 2 ? f1.rename(2, {0}) * f1.rename(2, {1}) : f1.rename(3, {0}) * s2.rename(3, {1, 2});
    if (opts.linear_terms) {
      RatFn q = depth == 2 ? stuffle_rhs(f1, RatFn(), 2) : stuffle_rhs(RatFn(), s2, 3);
      rhs = rhs + q;
    }
    res = lhs - rhs;
  } else {
    throw std::invalid_argument("full_ds_defect: flavor must be full_shuffle or full_stuffle");
  }
  res = res.degree_range(-1000, opts.max_weight - depth);
  return report(flavor, depth, res);
}

bool poles_allowed(const RatFn& f, int r) {
  std::map<LinForm, int> allowed;
  if (r == 1) {
    allowed[LinForm::var(1, 0)] = 2;
  } else {
    allowed[LinForm::var(r, 0)] += 1;
    for (int i = 0; i + 1 < r; ++i) allowed[LinForm::diff(r, i, i + 1)] += 1;
    allowed[LinForm::var(r, r - 1)] += 1;
  }
  for (const auto& [l, m] : f.den()) {
    auto it = allowed.find(l);
    if (it == allowed.end() || it->second < m) return false;
  }
  return true;
}

bool pls_member(const DepthTuple& t) {
  for (const auto& [r, f] : t.comps) {
    if (r > 3) continue;
    if (!poles_allowed(f, r)) return false;
    if (!linearized_stuffle_residual(f).is_zero()) return false;
    if (r >= 2 && !shuffle_residual(f).is_zero()) return false;
  }
  return true;
}

bool shuffle_via_lie(const MPoly& f) {
  for (const auto& [d, part] : unreduce(f).parts())
    if (!is_lie(rho_inv(part))) return false;
  return true;
}

std::vector<Mono> monomials(int nv, int deg) {
  std::vector<Mono> out;
  if (nv == 0) {
    if (deg == 0) out.push_back(0);
    return out;
  }
  std::vector<int> e(nv, 0);
  // lexicographic with the first exponent largest first
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == nv - 1) {
      e[k] = left;
      out.push_back(mono_make(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      rec(k + 1, left - a);
    }
  };
  rec(0, deg);
  return out;
}

size_t ls_dimension(int d, int n) {
  if (d < 1 || d > 3) throw std::invalid_argument("ls_dimension: depth 1..3");
  int deg = n - d;
  if (deg < 0) return 0;
  auto basis = monomials(d, deg);
  // images of each basis monomial under every equation
  std::vector<std::vector<RatFn>> images(basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    RatFn m(MPoly::from_terms(d, {{basis[j], Rational(1)}}));
    images[j].push_back(linearized_stuffle_residual(m));
    if (d >= 2) images[j].push_back(shuffle_residual(m));
  }
  LinSystem sys(basis.size());
  size_t neq = images.empty() ? 0 : images[0].size();
  for (size_t e = 0; e < neq; ++e) {
    std::map<Mono, std::vector<Rational>> rows;
    for (size_t j = 0; j < basis.size(); ++j) {
      const RatFn& im = images[j][e];
      if (!im.is_polynomial()) throw std::logic_error("polynomial equation produced a pole");
      for (const auto& [m, c] : im.num().terms()) {
        auto& row = rows[m];
        if (row.empty()) row.resize(basis.size());
        row[j] += c;
      }
    }
    for (const auto& kv : rows) sys.add_row(kv.second);
  }
  return basis.size() - sys.rank();
}

}  // namespace mzv
