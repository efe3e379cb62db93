#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gkm {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) once it has passed through `make_rational` or arithmetic.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses `[+-]digits` or `[+-]digits/digits` (nonzero denominator).
/// Throws ParseError on anything else, including decimals.
Rational parse_rational(std::string_view text);

/// Parses `[+-]digits`; throws ParseError otherwise.
Integer parse_integer(std::string_view text);

/// `p/q`, or just `p` when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses a comma-separated list, e.g. "1,-1/2,3".
RatVector parse_rational_list(std::string_view text);
IntVector parse_integer_list(std::string_view text);

Rational dot(const RatVector& a, const IntVector& b);

/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& v);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (gcd of entries 1, same signs).
IntVector primitive_direction(const RatVector& v);

Integer content(const IntVector& v);
bool is_primitive(const IntVector& v);

}  // namespace gkm
