#include "wci/numeric.hpp"

#include <numeric>

namespace wci {

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Integer ceil(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  // cpp_int division truncates toward zero; denominators are positive.
  Integer quotient = num / den;
  if (num % den != 0 && num > 0) {
    quotient += 1;
  }
  return quotient;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

long gcd_of(std::span<const long> values) {
  long g = 0;
  for (long v : values) {
    g = std::gcd(g, v);
  }
  return g;
}

}  // namespace wci
