#include "credal/rational.hpp"

#include "credal/errors.hpp"

#include <cctype>

namespace credal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));

  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  // Division normalizes; the string constructor of gmp_rational does not.
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace credal
