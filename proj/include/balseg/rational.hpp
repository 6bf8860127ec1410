#pragma once

#include <gmpxx.h>

#include <string>

namespace balseg {

using Rational = mpq_class;

// The gmp classes convert from long but not long long.
inline Rational to_rational(long long v) {
  return Rational(static_cast<long>(v));
}

// "n" when the denominator is 1, otherwise "n/d" in lowest terms.
std::string to_string(const Rational& q);

}  // namespace balseg
