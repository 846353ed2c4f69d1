#include "latmet/rational.hpp"

#include <stdexcept>

namespace latmet {

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("rational: empty string");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) {
      throw std::invalid_argument("rational: zero denominator");
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) +
                                "': " + e.what());
  }
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/" + denominator(value).str();
  }
  return out;
}

Rational pow2(long exponent) {
  Integer big = Integer(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(1, big) : Rational(big);
}

}  // namespace latmet
