#pragma once

#include <vector>

#include "cglab/bigint.hpp"
#include "cglab/dfa.hpp"

namespace cglab {

// Integer-coefficient polynomial in z; coeffs[i] is the z^i coefficient.
// Normalized form has no trailing zero coefficients (zero = empty vector).
using Poly = std::vector<BigInt>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_neg(Poly a);
// Exact division; throws InvariantViolation if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
BigInt poly_content(const Poly& p);
Poly poly_primitive(const Poly& p);
// GCD via the primitive polynomial remainder sequence; result is primitive
// with positive leading coefficient (gcd(0,0) = 0).
Poly poly_gcd(Poly a, Poly b);
std::string poly_to_string(const Poly& p);  // human-readable, z variable

// Exact rational generating function num/den in lowest terms with den(0) > 0.
struct RationalGF {
  Poly num;
  Poly den;
};

// u (I - zT)^{-1} v over the automaton's transfer matrix, computed by
// fraction-free (Bareiss) elimination; series coefficients equal
// count_per_length exactly.
RationalGF rational_gf(const Dfa& a);

// First n_max+1 series coefficients. Throws InvariantViolation when a
// coefficient is not an integer (cannot happen for automaton series).
std::vector<BigInt> series_expand(const RationalGF& f, int n_max);

}  // namespace cglab
