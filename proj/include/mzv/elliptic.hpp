// Genus-one derivations, the map phi and the lifting check.
#pragma once

#include "mzv/canonical.hpp"
#include "mzv/ncwords.hpp"

namespace mzv {

struct EpsilonDerivation {
  int index = 0;  // 2n+2
  Derivation value;
  Normalization norm = Normalization::Canonical;
};

// solves [a, x] = r for x with zero coefficient on pure powers of a; throws if r is not in the image
NCPoly solve_ad_a(const NCPoly& r);

// eps_{2n+2} for n >= -1; cutoff must be >= 2n+3
EpsilonDerivation epsilon(int n, unsigned weight_cutoff, Normalization norm = Normalization::Canonical);

struct PhiImage {
  unsigned cutoff = 0;
  NCPoly x0{Genus::G1};  // image of x0; x1 goes to [a,b]
};
// terms of weight <= cutoff
PhiImage hain_phi(unsigned weight_cutoff);
// multiplicative extension; drops weight > weight_cutoff and b-degree > b_cutoff
NCPoly phi_apply(const NCPoly& p, unsigned weight_cutoff, unsigned b_cutoff = kNoCutoff);
// x0 -> a, x1 -> [a,b]
NCPoly phi_zero(const NCPoly& p);

// least b-degree of a nonzero polynomial (kNoCutoff for 0)
unsigned b_degree(const NCPoly& p);
bool in_B(const NCPoly& p, unsigned r);
bool in_B(const Derivation& d, unsigned r);

struct BDegreeReport {
  bool derivation = false, on_a = false, on_phi = false;
  bool consistent() const { return derivation == on_a && on_a == on_phi; }
};
BDegreeReport b_degree_predicates(const Derivation& d, unsigned r, unsigned weight_cutoff);

// rho(phi0(p)) = l_r rho(p) for p of depth r
bool phi_zero_check(const NCPoly& p);

struct ChiReport {
  bool holds = false;
  RatFn residual{4};  // y-frame, depth 3
};
// the depth 1-3 equations with chi = xi_{2n+1}; extra is added to chi^(3) (x-frame)
ChiReport chi_equations_check(int n, const RatFn* extra = nullptr);

struct LiftReport {
  bool holds = false;
  NCPoly lhs{Genus::G1}, rhs{Genus::G1};
};
// delta(phi(x0)) = phi(sigma(x0)) mod B^4 and weight > cutoff
LiftReport lift_theorem_check(int n, unsigned weight_cutoff, bool with_correction = true);

// [eps4, eps10] - 3 [eps6, eps8]
Derivation pollack_combination(unsigned weight_cutoff);

}  // namespace mzv
