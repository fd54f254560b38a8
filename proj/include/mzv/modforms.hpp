// Period polynomials, the depth-2 kernel of the bracket and cuspidal elements.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mzv/canonical.hpp"
#include "mzv/elliptic.hpp"

namespace mzv {

struct PeriodPolynomial {
  int weight = 0;  // 2n; the polynomial has degree 2n-2
  MPoly value{2};
};

// P(x1,0) = P(0,x2) = 0, antisymmetric, three-term relation
bool is_period_polynomial(const MPoly& p, bool even_only);
std::vector<PeriodPolynomial> period_poly_basis(int two_n, bool even_only);

struct KernelElement {
  int weight = 0;
  std::map<std::pair<int, int>, Rational> lambda;  // i < j; lambda_{j,i} = -lambda_{i,j}

  Rational at(int i, int j) const;
  bool is_zero() const { return lambda.empty(); }
};

// sum_{i<j} lambda_ij {x1^{2i}, x1^{2j}}
RatFn kernel_image(const KernelElement& k);
std::vector<KernelElement> kernel_K(int two_n);
// sum_{i,j} lambda_ij x1^{2i} x2^{2j}; throws if the result is not a period polynomial
PeriodPolynomial K_to_period(const KernelElement& k);
KernelElement period_to_K(const PeriodPolynomial& p);
// lambda_ij -> lambda_ij (2i)!/B_{2i} (2j)!/B_{2j}; inverse = true divides instead
KernelElement underline_rescale(const KernelElement& k, bool inverse = false);

// depth-4 part of sum_{i<j} lambda_ij {s_i, s_j} for the given sigma^c normalization
RatFn cuspidal_c_direct(const KernelElement& k, Normalization norm = Normalization::Canonical);
// closed formula in terms of triple brackets with x^-2 and the weight-3 polar element
RatFn cuspidal_c(const KernelElement& k);

// genus-1 derivation with ell'(Z) = -xi_3^(3)/12
Derivation z3_derivation();
// derivation whose ell' image is the given depth-r function (x-frame); throws if not in Der^Theta
Derivation derivation_from_ell_prime(const RatFn& f);
// for k in the rescaled kernel
Derivation elliptic_c(const KernelElement& k);

}  // namespace mzv
