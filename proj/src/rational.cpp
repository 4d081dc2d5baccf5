#include "bordersub/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace bordersub {
namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t pos = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer literal: " + std::string(text));
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const BigInt num = parse_integer(text.substr(0, slash), true);
  const BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return BigInt(0);
  return abs(a / gcd(a, b) * b);
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw std::domain_error("not an integer: " + format_rational(value));
  return to_int64(BigInt(numerator(value)));
}

}  // namespace bordersub
