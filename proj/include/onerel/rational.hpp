#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace onerel {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p" (optional sign). Throws ParseError on malformed input.
Rational parse_rational(std::string_view s);

double to_double(const Rational& q);

}  // namespace onerel
