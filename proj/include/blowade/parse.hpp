#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blowade/polynomial.hpp"

namespace blowade {

/// Parses `expr := term (('+'|'-') term)*`, `term := coeff ('*'? factor)*`,
/// `factor := var ('^' nat)?`, `coeff := int | int '/' nat`.
///
/// Accepts z1,z2,z3 and the local aliases x1,x2,x3.
Polynomial parse_polynomial(std::string_view text);

/// Same grammar with caller-chosen variable names (at most three).
/// Names are matched longest-first.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Polynomial in z1,z2,z3 whose coefficients are polynomials in a parameter.
/// Keyed by the parameter exponent.
using ParametricPolynomial = std::map<int, Polynomial>;

ParametricPolynomial parse_parametric(std::string_view text, std::string_view parameter = "s");

Polynomial evaluate_parameter(const ParametricPolynomial& family, const Rational& value);

Rational parse_rational(std::string_view text);

}  // namespace blowade
