// JSON forms of the library's values.
#pragma once

#include <json.hpp>

#include "mzv/dshuffle.hpp"
#include "mzv/modforms.hpp"

namespace mzv {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

// [[word, "p/q"], ...] in canonical order
json to_json(const NCPoly& p);
// genus inferred from the letters; `g` is used when no letter decides it
NCPoly ncpoly_from_json(const json& j, Genus g = Genus::G0);

// {"depth": r, "numerator": [[[e1..er], "p/q"], ...], "denominator": ["x1", "x1-x2", ...]}
json component_to_json(int depth, const RatFn& f);
std::pair<int, RatFn> component_from_json(const json& j);

json to_json(const DepthTuple& t);
DepthTuple depth_tuple_from_json(const json& j);

json to_json(const Derivation& d);
Derivation derivation_from_json(const json& j);

json to_json(const DefectReport& r);
DefectReport defect_report_from_json(const json& j);

// coefficients of x1^d, x1^{d-1} x2, ..., x2^d
json to_json(const PeriodPolynomial& p);
PeriodPolynomial period_polynomial_from_json(const json& j);

// {"weight": 2n, "lambda": [[i, j, "p/q"], ...]} with i < j
json to_json(const KernelElement& k);
KernelElement kernel_element_from_json(const json& j);

}  // namespace mzv
