#include "balseg/totient.hpp"

#include <numeric>
#include <stdexcept>

namespace balseg {

long long totient(long long n) {
  if (n < 1) throw std::invalid_argument("totient requires n >= 1");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> totient_sieve(long long n) {
  if (n < 1) throw std::invalid_argument("totient_sieve requires n >= 1");
  std::vector<long long> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (long long p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;  // p composite: already reduced
    for (long long k = p; k <= n; k += p) phi[k] -= phi[k] / p;
  }
  return {phi.begin() + 1, phi.end()};
}

}  // namespace balseg
