#ifndef GERM_CPOLY_HPP
#define GERM_CPOLY_HPP

#include <string>
#include <vector>

#include "germ/cyclo.hpp"

namespace germ {

// Dense univariate polynomial over the cyclotomic tower, ascending
// coefficients, trailing zeros trimmed. Used for Newton-polygon faces and as
// the coefficient ring of bivariate polynomials viewed in y.
using CPoly = std::vector<CycloNumber>;

void cp_trim(CPoly& p);
int cp_deg(const CPoly& p);  // -1 for the zero polynomial
bool cp_is_zero(const CPoly& p);

CPoly cp_add(const CPoly& a, const CPoly& b);
CPoly cp_sub(const CPoly& a, const CPoly& b);
CPoly cp_mul(const CPoly& a, const CPoly& b);
CPoly cp_scale(const CPoly& a, const CycloNumber& c);
CPoly cp_shift(const CPoly& a, unsigned k);  // multiply by z^k

// Quotient and remainder over the field of coefficients.
void cp_divrem(const CPoly& a, const CPoly& b, CPoly& q, CPoly& r);
// Exact division; throws InternalError when the remainder is nonzero.
CPoly cp_divexact(const CPoly& a, const CPoly& b);

// Monic gcd over the coefficient field.
CPoly cp_gcd(CPoly a, CPoly b);

CPoly cp_derivative(const CPoly& a);
CycloNumber cp_eval(const CPoly& a, const CycloNumber& x);

std::string cp_to_string(const CPoly& a, const std::string& var = "z");

}  // namespace germ

#endif
