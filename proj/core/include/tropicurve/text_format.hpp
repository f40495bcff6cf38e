#pragma once

// Text form of tropical polynomials: "c * x^a * y^b + ..." where "+" is the
// tropical sum (max) and "*" the tropical product (ordinary addition of
// coefficients and exponents). A term without a number has coefficient 0.

#include <string>
#include <string_view>

#include "tropicurve/trop_poly.hpp"

namespace tropicurve {

// Throws Error(kParseError).
TropicalPolynomial parse_polynomial_text(std::string_view text);

std::string to_text(const TropicalPolynomial& f);

}  // namespace tropicurve
