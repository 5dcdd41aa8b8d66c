#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace kcausal {

// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a/b", "a" or "-a/b"; the result is canonicalized. Throws
// ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Reduced "a/b" form; integers are written with denominator 1.
std::string format_rational(const Rational& value);

// Least common multiple of the denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

double to_double(const Rational& value);

// num / den in canonical form. mpq_class(num, den) does not reduce.
Rational ratio(const Integer& num, const Integer& den);

}  // namespace kcausal
