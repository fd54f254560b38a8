// Double shuffle defects in depths <= 3, pls membership, solution-space dimensions.
#pragma once

#include <string>

#include "mzv/commrep.hpp"
#include "mzv/linsys.hpp"

namespace mzv {

enum class Flavor { Shuffle, StuffleModProducts, LinearizedStuffle, FullShuffle, FullStuffle };
std::string flavor_name(Flavor f);

struct DefectReport {
  Flavor flavor;
  int depth;
  RatFn residual;
  bool satisfied;
};

// f(x1,x12) + f(x2,x12) and the depth-3 analogue
DefectReport shuffle_defect(const DepthTuple& t, int depth);
// symmetrization minus the difference-quotient right-hand side
DefectReport stuffle_defect_mod_products(const DepthTuple& t, int depth);
// f(x)-f(-x) (evenness), 2-cycle sum, 3-cycle sum
DefectReport linearized_defect(const DepthTuple& t, int depth);

// The residual of a linear equation applied to a single component.
RatFn shuffle_residual(const RatFn& f);                  // depth from f.nv()
RatFn linearized_stuffle_residual(const RatFn& f);       // depth from f.nv()

struct FullDSOptions {
  int max_weight = 0;         // compare homogeneous parts of weight <= max_weight
  bool linear_terms = true;   // false: semi-homogeneous system (difference quotients dropped)
};
// t holds all-weight series truncated at opts.max_weight; residual restricted to the window
DefectReport full_ds_defect(const DepthTuple& t, int depth, Flavor flavor, const FullDSOptions& opts);
// stuffle-regularized component: f*2 = f2 + 1/48, f*3 = f3 + f1(x1)/48
RatFn stuffle_regularized(const DepthTuple& t, int depth);

// allowed poles after reduction: x1, x_i - x_{i+1}, x_r (depth 1: x1^2)
bool poles_allowed(const RatFn& f, int depth);
bool pls_member(const DepthTuple& t);

// shuffle equations in depth d via Lie membership of the un-reduced polynomial
bool shuffle_via_lie(const MPoly& f);

// dimension of homogeneous solutions of the linearized double shuffle system
// in depth d and weight n (polynomials of degree n-d in d variables)
size_t ls_dimension(int d, int n);

// monomials of degree deg in nv variables, graded-lex order
std::vector<Mono> monomials(int nv, int deg);

}  // namespace mzv
