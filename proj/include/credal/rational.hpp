#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace credal {

/// Exact rational backed by GMP. Expression templates are disabled so that
/// `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;

/// Parses "n", "-n", "p/q" (q != 0). The result is always in lowest terms.
/// Throws ParseError on anything else, including decimal notation.
Rational parse_rational(std::string_view text);

/// Canonical form: "n" for integers, otherwise "p/q" with q > 0 and gcd 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace credal
