/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals (GMP) and the scalar protocol used by
 *        the generic polynomial and matrix templates.
 */
#ifndef STARPT_ALGEBRA_RATIONAL_HPP
#define STARPT_ALGEBRA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace starpt::algebra {

/// Canonical form (gcd 1, positive denominator) is maintained by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// Scalar protocol. Every coefficient type T used with UniPoly<T> or
// ExactMatrix<T> provides these overloads; `like` supplies the ring context
// (the cyclotomic field for CycloNum) when a fresh constant is needed.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

std::string to_string(const Rational& q);

}  // namespace starpt::algebra

#endif
