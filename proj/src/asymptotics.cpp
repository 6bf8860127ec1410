#include "balseg/asymptotics.hpp"

#include <numeric>
#include <stdexcept>

#include "balseg/errors.hpp"
#include "balseg/totient.hpp"

namespace balseg {

namespace {

long long math_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

Rational polynomial_part(const AsymptoticProfile& prof, long long length) {
  const Rational l = to_rational(length);
  if (prof.family == Family::balanced)
    return prof.alpha * l * l + prof.beta * l;
  if (prof.parity_form)  // odd heights: only odd lengths grow
    return length % 2 == 0 ? Rational(0) : 2 * prof.alpha * l;
  return prof.alpha * l;
}

}  // namespace

Count AsymptoticProfile::reconstruct(long long length) const {
  Rational value =
      polynomial_part(*this, length) + residual[math_mod(length, period)];
  value.canonicalize();
  if (value.get_den() != 1)
    throw inconsistency_error("profile reconstruction is not an integer at " +
                              std::to_string(length));
  return value.get_num();
}

AsymptoticProfile asymptotic_profile(Counter& counter, Family family,
                                     long long h) {
  if (h < 2) throw std::invalid_argument("profiles require h >= 2");
  AsymptoticProfile prof;
  prof.family = family;
  prof.h = h;
  const Count hc = to_count(h);
  if (family == Family::balanced) {
    Count alpha_sum = 0, beta_sum = 0;
    const auto phi = totient_sieve(h);
    for (long long i = 1; i <= h - 1; ++i)
      alpha_sum += to_count(h - i) * to_count(phi[i - 1]);
    for (long long i = 1; i <= h; ++i) beta_sum += to_count(phi[i - 1]);
    prof.alpha = Rational(alpha_sum, hc * (hc * hc - 1));
    prof.beta = Rational(beta_sum, hc * (hc + 1));
    prof.parity_form = false;
    prof.period = std::lcm(std::lcm(h - 1, h), h + 1);
  } else {
    Count alpha_sum = 0;
    for (long long i = 1; i <= h / 2; ++i)  // h/2 = ceil((h-1)/2)
      alpha_sum += to_count(totient(h + 1 - 2 * i));
    prof.alpha = Rational(alpha_sum, hc * hc - 1);
    prof.beta = 0;
    prof.parity_form = (h % 2 == 1);
    prof.period = std::lcm(h - 1, h + 1) * (prof.parity_form ? 2 : 1);
  }
  prof.alpha.canonicalize();
  prof.beta.canonicalize();

  prof.residual.resize(prof.period);
  for (long long l = 0; l < prof.period; ++l) {
    prof.residual[l] =
        Rational(counter.count(family, l, h)) - polynomial_part(prof, l);
    prof.residual[l].canonicalize();
  }
  // The decomposition is only trusted once the residual demonstrably repeats.
  for (long long l = prof.period; l < 3 * prof.period; ++l) {
    Rational r = Rational(counter.count(family, l, h)) - polynomial_part(prof, l);
    r.canonicalize();
    if (r != prof.residual[l % prof.period])
      throw inconsistency_error("residual fails to be periodic at length " +
                                std::to_string(l));
  }
  return prof;
}

}  // namespace balseg
