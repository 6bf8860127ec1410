#pragma once

#include <vector>

#include "balseg/counting.hpp"
#include "balseg/rational.hpp"

namespace balseg {

// Exact decomposition of a counting column as polynomial part plus a
// periodic residual:
//
//   balanced:         s(L,h) = alpha L^2 + beta L + residual[L mod period]
//   palindrome, even h: p(L,h) = alpha L + residual[L mod period]
//   palindrome, odd h:  p(L,h) = alpha (1 - (-1)^L) L + residual[L mod period]
//
// The parity_form flag records whether the third shape applies.
struct AsymptoticProfile {
  Family family;
  long long h;
  Rational alpha;
  Rational beta;  // zero for palindromes
  bool parity_form;
  long long period;
  std::vector<Rational> residual;  // indexed by L mod period

  // Evaluates the decomposition; defined for every integer length. Raises
  // inconsistency_error if the value fails to be an integer.
  Count reconstruct(long long length) const;
};

// Builds the profile for h >= 2. alpha, beta, and the period come from
// totient sums; the residual is tabulated over one period and then verified
// to repeat over [0, 3*period) (inconsistency_error on failure).
AsymptoticProfile asymptotic_profile(Counter& counter, Family family,
                                     long long h);

}  // namespace balseg
