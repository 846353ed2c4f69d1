#ifndef LATMET_RATIONAL_HPP
#define LATMET_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace latmet {

/// Exact arbitrary-precision rational. Always held in lowest terms with a
/// positive denominator; every measure and distance in the library is one
/// of these.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q" (or just "p"). Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", omitting "/q" when the denominator is 1.
std::string to_string(const Rational& value);

/// 2^exponent as an exact rational; exponent may be negative.
Rational pow2(long exponent);

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

}  // namespace latmet

#endif  // LATMET_RATIONAL_HPP
