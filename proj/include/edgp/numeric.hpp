#pragma once

// Exact rationals for every 1D code path, and a 128-bit binary float for the
// places where coordinates are irrational (simplex gadgets) or deliberately
// imprecise (approximate realizations).

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgp {

using Rational = mpq_class;
using Integer = mpz_class;

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kRealPrecisionBits = 128;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or a plain decimal such as "-1.25" or "3e-2" into an exact
/// rational. Unreduced fractions are accepted and canonicalized.
Rational parse_rational(std::string_view text);

/// Parses a real literal; fractions "p/q" are evaluated at full precision.
Real parse_real(std::string_view text);

/// Reduced "p" or "p/q".
std::string format_rational(const Rational& q);

/// Shortest round-tripping decimal for the 128-bit type.
std::string format_real(const Real& x);

Real to_real(const Rational& q);

/// Exact value of a binary float as a dyadic rational.
Rational to_rational(const Real& x);

bool is_integer(const Rational& q);

}  // namespace edgp
