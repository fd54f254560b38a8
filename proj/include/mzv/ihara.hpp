// Linearized Ihara action and bracket on words and on rational functions.
#pragma once

#include "mzv/commrep.hpp"
#include "mzv/ncwords.hpp"

namespace mzv {

// p o q on words (genus 0)
NCPoly circ_words(const NCPoly& p, const NCPoly& q);
NCPoly bracket_words(const NCPoly& p, const NCPoly& q);

// y-frame: f has r+1 variables, g has s+1; result has r+s+1
RatFn circ_y(const RatFn& f, const RatFn& g);
RatFn concat_y(const RatFn& f, const RatFn& g);
RatFn bracket_y(const RatFn& f, const RatFn& g);
RatFn odot_y(const RatFn& f, const RatFn& g);

// x-frame (reduced): f in x1..xr, g in x1..xs
RatFn circ(const RatFn& f, const RatFn& g);
RatFn concat(const RatFn& f, const RatFn& g);
RatFn bracket(const RatFn& f, const RatFn& g);
RatFn odot(const RatFn& f, const RatFn& g);

// (f*g)(x1,x2) = f(x1)g(x2) - f(x2-x1)g(x2) + f(x2-x1)g(x1) - f(x2)g(x1), f even
RatFn star_product(const RatFn& f, const RatFn& g);

// bracket of graded elements, keeping depths <= max_depth
DepthTuple bracket(const DepthTuple& a, const DepthTuple& b, int max_depth);
// a o b componentwise, depths <= max_depth
DepthTuple circ(const DepthTuple& a, const DepthTuple& b, int max_depth);

// sum_k ad(s)^k(t)/k!, depths <= max_depth (at most 4)
DepthTuple exp_ad(const DepthTuple& s, const DepthTuple& t, int max_depth);

// rho-bar of delta_{x1} w against {f/x_r, 1/x_1} x_{r+1}
bool dx1_identity_check(const NCPoly& w);

}  // namespace mzv
