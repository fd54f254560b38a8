// s, xi, sigma^c, z3, tau and coefficient maps.
#pragma once

#include <string>
#include <vector>

#include "mzv/commrep.hpp"
#include "mzv/ihara.hpp"

namespace mzv {

enum class Normalization { Canonical, Heretical };
std::string normalization_name(Normalization n);

// B_{2n}/(2n)! for n >= 0, 1/12 for n = -1
Rational heretical_factor(int n);

// s1 = 1/(2x1), s2, s3 = {s1,s2}/2
DepthTuple s_elements();

// x1^{2n} as a depth-1 function (n >= -1)
RatFn x1_power(int two_n);

// xi_{2n+1} in depths 1..max_depth (max_depth <= 4), canonical scaling
DepthTuple xi(int n, int max_depth);
DepthTuple xi_heretical(int n, int max_depth);

struct SigmaC {
  DepthTuple value;             // polynomial components
  std::optional<RatFn> witness;  // n = 1 only: the polar depth-3 part
};
// sigma^c_{2n+1}, depths 1..max_depth (<= 4)
SigmaC sigma_c(int n, int max_depth, Normalization norm);

struct PoleReport {
  bool pole_free = true;
  struct Pole {
    int depth;
    LinForm form;
    int order;
    std::optional<RatFn> residue;  // simple poles only
  };
  std::vector<Pole> poles;
};
PoleReport verify_polefree(const DepthTuple& t);

RatFn z3();

struct TauResult {
  int max_weight = 0;
  DepthTuple gamma, theta, p, phi, C, tau;
  std::vector<std::string> warnings;  // unexpected parts of degree 1-r in Theta
};
TauResult tau(int max_weight);
// stuffle-regularized tau*: tau*2 = tau2 + 1/48, tau*3 = tau3 + tau1(x1)/48
DepthTuple tau_star(const TauResult& t);

// b1(x) = 1/x + sum_{n>=1} B_{2n}/(2n)! x^{2n-1}, terms of weight <= max_weight
RatFn b1_rat(int max_weight);

// coefficient of x1^{n1-1} ... xr^{nr-1}
Rational coefficient(const DepthTuple& t, const std::vector<int>& composition);
Rational sigma_coeff(int n, const std::vector<int>& composition);
Rational tau_coeff(const TauResult& t, const std::vector<int>& composition);

}  // namespace mzv
