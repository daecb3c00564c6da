#pragma once

#include <span>
#include <vector>

#include "interlace/exact.hpp"

namespace interlace {

/// Dense polynomial over the rationals, coefficient of x^i at index i.
/// Trailing zeros are trimmed; the zero polynomial is the empty vector.
using RationalPoly = std::vector<Rational>;

RationalPoly trim(RationalPoly p);
RationalPoly derivative(const RationalPoly& p);
/// Remainder of a / b; b must be nonzero.
RationalPoly poly_rem(const RationalPoly& a, const RationalPoly& b);
/// Quotient of a / b; b must be nonzero.
RationalPoly poly_quot(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor (zero if both inputs are zero).
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);
/// p / gcd(p, p'), made monic.
RationalPoly square_free_part(const RationalPoly& p);

/// p_0 = p, p_1 = p', p_{k+1} = -rem(p_{k-1}, p_k) until the remainder is 0.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

struct SturmResult {
  int degree = 0;            // degree of the queried polynomial after trimming
  int real_root_count = 0;   // distinct real roots
  int square_free_degree = 0;
  bool all_real = false;     // every root real, multiplicities allowed
};

/// Counts distinct real roots on (-inf, inf) with an exact Sturm chain on the
/// square-free part. Throws DomainError for the zero polynomial.
SturmResult sturm_real_roots(std::span<const Rational> coefficients);
inline SturmResult sturm_real_roots(const CoefficientRow& row) { return sturm_real_roots(row.entries()); }

}  // namespace interlace
