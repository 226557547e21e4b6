// Exact integer and rational arithmetic used throughout the library.
// Every numeric quantity in the toolkit is exact; there is no floating
// point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gogkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical formatting: lowest terms, positive denominator, "p" when the
// denominator is 1 and "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline Int int_pow(Int base, Int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Int result = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace gogkit
