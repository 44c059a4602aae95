#include "edgp/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace edgp {

namespace {

bool is_plain_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_plain_integer(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// [-+]digits[.digits][(e|E)[-+]digits]
Rational parse_decimal(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string mantissa;
  long scale = 0;
  bool seen_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa += s[i];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa += s[i];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ParseError("malformed number: '" + std::string(s) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::string_view exp = s.substr(i + 1);
    if (!is_plain_integer(exp)) throw ParseError("malformed exponent: '" + std::string(s) + "'");
    scale += std::stol(std::string(exp));
    i = s.size();
  }
  if (i != s.size()) throw ParseError("malformed number: '" + std::string(s) + "'");
  Rational q(Integer(mantissa, 10));
  if (scale > 0) q *= pow10(scale);
  if (scale < 0) q /= pow10(-scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (is_plain_integer(text)) return Rational(parse_integer(text));
  return parse_decimal(text);
}

Real parse_real(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return to_real(parse_rational(text));
  try {
    return Real(std::string(text));
  } catch (const std::exception&) {
    throw ParseError("malformed real: '" + std::string(text) + "'");
  }
}

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string format_real(const Real& x) {
  std::ostringstream os;
  os.precision(std::numeric_limits<Real>::max_digits10);
  os << x;
  return os.str();
}

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Rational to_rational(const Real& x) {
  if (x == 0) return Rational(0);
  int exponent = 0;
  Real mantissa = boost::multiprecision::frexp(x, &exponent);  // |mantissa| in [0.5, 1)
  mantissa = boost::multiprecision::ldexp(mantissa, static_cast<int>(kRealPrecisionBits));
  exponent -= static_cast<int>(kRealPrecisionBits);
  boost::multiprecision::cpp_int digits = static_cast<boost::multiprecision::cpp_int>(mantissa);
  Rational q(Integer(digits.str(), 10));
  if (exponent > 0) q *= Rational(Integer(1) << exponent);
  if (exponent < 0) q /= Rational(Integer(1) << -exponent);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace edgp
