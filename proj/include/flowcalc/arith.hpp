#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flowcalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace flowcalc
