#pragma once

#include <vector>

#include "balseg/counting.hpp"
#include "balseg/polynomial.hpp"

namespace balseg {

// Quotient num/den of polynomials, den != 0. Equality is equality of the
// represented function (cross-multiplication), not of the representation.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  RationalFunction(Polynomial numerator, Polynomial denominator);
};

bool operator==(const RationalFunction& a, const RationalFunction& b);

// Taylor coefficients c_0..c_n of f at the origin, by the linear recurrence
// c_i = (num_i - sum_{k>=1} den_k c_{i-k}) / den_0. Requires den(0) != 0
// (std::domain_error otherwise).
std::vector<Rational> series_coefficients(const RationalFunction& f,
                                          long long n);

// A generating function whose denominator is kept factored as a product of
// cyclotomic-style factors 1 - X^k, the shape in which the families below
// arise naturally and print readably.
struct GeneratingFunction {
  Polynomial numerator;
  std::vector<long long> denominator_orders;  // k values of the 1 - X^k factors

  Polynomial denominator() const;
  RationalFunction ratio() const;
};

// Generating function of the column L -> s(L,h) (family balanced) or
// L -> p(L,h) (family palindrome), extended values included, so that its
// series expansion reproduces the column exactly from L = 0 on.
// Requires h >= 0.
GeneratingFunction generating_function(Counter& counter, Family family,
                                       long long h);

}  // namespace balseg
