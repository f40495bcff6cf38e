#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "tropicurve/errors.hpp"
#include "tropicurve/lattice.hpp"
#include "tropicurve/trop_poly.hpp"

// Asserts that `expr` throws tropicurve::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                               \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const tropicurve::Error& e_) {                            \
      thrown_ = true;                                                  \
      CHECK(std::string(tropicurve::error_name(e_.code())) == std::string(tropicurve::error_name(expected))); \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected " << tropicurve::error_name(expected)); \
  } while (false)

namespace testing_util {

using tropicurve::LatticePoint;
using tropicurve::Rational;
using tropicurve::Term;
using tropicurve::TropicalPolynomial;

inline Rational q(long num, long den = 1) { return tropicurve::make_rational(num, den); }

inline TropicalPolynomial line() { return TropicalPolynomial{{{0, 0}, q(0)}, {{1, 0}, q(0)}, {{0, 1}, q(0)}}; }

// Strictly concave lift on d * Delta_2.
inline TropicalPolynomial honeycomb_lift(int d) {
  std::vector<Term> terms;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) terms.push_back({{a, b}, q(-(a * a + a * b + b * b))});
  }
  return TropicalPolynomial(terms);
}

inline std::string fixtures_dir() { return TROPICURVE_TEST_FIXTURES; }

}  // namespace testing_util
