#pragma once

#include <vector>

namespace balseg {

// Euler's totient phi(n), by trial-division factorization. Requires n >= 1.
long long totient(long long n);

// phi(1), ..., phi(n) (entry i holds phi(i+1)), by a linear-style sieve.
// Requires n >= 1.
std::vector<long long> totient_sieve(long long n);

}  // namespace balseg
