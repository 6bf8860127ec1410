#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "balseg/totient.hpp"

using namespace balseg;

namespace {

// phi(n) straight from the definition: count the coprime residues.
long long totient_by_definition(long long n) {
  long long count = 0;
  for (long long k = 1; k <= n; ++k) count += (std::gcd(k, n) == 1);
  return count;
}

}  // namespace

TEST_CASE("frozen values") {
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(6) == 2);
  CHECK(totient(10) == 4);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(totient(100) == 40);
  CHECK(totient(1000000) == 400000);
}

TEST_CASE("matches the definition") {
  for (long long n = 1; n <= 300; ++n)
    CHECK(totient(n) == totient_by_definition(n));
}

TEST_CASE("sieve matches the single evaluations") {
  const auto phi = totient_sieve(3);
  REQUIRE(phi.size() == 3);
  CHECK(phi[0] == 1);
  CHECK(phi[1] == 1);
  CHECK(phi[2] == 2);
  const auto big = totient_sieve(2000);
  for (long long n = 1; n <= 2000; ++n) CHECK(big[n - 1] == totient(n));
}

TEST_CASE("rejects nonpositive arguments") {
  CHECK_THROWS_AS(totient(0), std::invalid_argument);
  CHECK_THROWS_AS(totient(-5), std::invalid_argument);
  CHECK_THROWS_AS(totient_sieve(0), std::invalid_argument);
}
