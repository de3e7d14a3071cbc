#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace obm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(long base, int exp) {
  BigInt r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

// Downcast with an explicit range check; cut coefficients reach n^(n-1).
inline double to_double_checked(const Rational& x) {
  const double d = x.convert_to<double>();
  if (!std::isfinite(d)) {
    throw std::overflow_error("rational value does not fit in a double: " + x.str());
  }
  return d;
}

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace obm
