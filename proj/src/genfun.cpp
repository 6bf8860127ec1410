#include "balseg/genfun.hpp"

#include <stdexcept>
#include <utility>

namespace balseg {

RationalFunction::RationalFunction(Polynomial numerator,
                                   Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) throw std::invalid_argument("denominator is zero");
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num * b.den == b.num * a.den;
}

std::vector<Rational> series_coefficients(const RationalFunction& f,
                                          long long n) {
  if (n < 0) throw std::invalid_argument("series order is negative");
  const Rational d0 = f.den.coefficient(0);
  if (d0 == 0)
    throw std::domain_error("series undefined: denominator vanishes at 0");
  std::vector<Rational> c(n + 1);
  for (long long i = 0; i <= n; ++i) {
    Rational acc = f.num.coefficient(i);
    const long long reach = std::min(i, f.den.degree());
    for (long long k = 1; k <= reach; ++k)
      acc -= f.den.coefficient(k) * c[i - k];
    c[i] = acc / d0;
  }
  return c;
}

Polynomial GeneratingFunction::denominator() const {
  Polynomial d = Polynomial::constant(1);
  for (long long k : denominator_orders) d = d * Polynomial::one_minus_power(k);
  return d;
}

RationalFunction GeneratingFunction::ratio() const {
  return {numerator, denominator()};
}

namespace {

// Truncated column sum_{L=0}^{n-1} c(L) X^L of a counting column.
Polynomial column_section(Counter& counter, Family family, long long h,
                          long long n) {
  std::vector<Rational> cs(std::max<long long>(n, 0));
  for (long long l = 0; l < n; ++l) cs[l] = Rational(counter.count(family, l, h));
  return Polynomial(std::move(cs));
}

// Numerator over (1-X^{h-1})(1-X^h)(1-X^{h+1}) for the balanced column,
// h >= 2. Writing V_n for the section of the column below n and B for the
// boundary sum over the short lengths,
//
//   F = (1-X^{h-1}) (V_{2h} - X^h V_h - X^{h+1} V_{h-1} - X^{2h-1})
//       + (1+X) B,   B = sum_{r=0}^{h-2} s(h-1,r) X^{r+2h-1},
//
// which packages the column recurrence: multiplying the column series by the
// three factors telescopes everything past length 2h-1 away.
Polynomial balanced_numerator(Counter& counter, long long h) {
  const Polynomial v_2h = column_section(counter, Family::balanced, h, 2 * h);
  const Polynomial v_h = column_section(counter, Family::balanced, h, h);
  const Polynomial v_h1 = column_section(counter, Family::balanced, h, h - 1);
  std::vector<Rational> boundary(3 * h - 2);
  for (long long r = 0; r <= h - 2; ++r)
    boundary[r + 2 * h - 1] = Rational(counter.s(h - 1, r));
  const Polynomial b(std::move(boundary));
  const Polynomial core = v_2h - Polynomial::monomial(h) * v_h -
                          Polynomial::monomial(h + 1) * v_h1 -
                          Polynomial::monomial(2 * h - 1);
  return Polynomial::one_minus_power(h - 1) * core +
         (Polynomial::constant(1) + Polynomial::monomial(1)) * b;
}

// Numerator over (1-X^{h-1})(1-X^{h+1}) for the palindrome column, h >= 2.
Polynomial palindrome_numerator(Counter& counter, long long h) {
  const Polynomial head = column_section(counter, Family::palindrome, h, h);
  std::vector<Rational> boundary(2 * h - 1);
  for (long long r = 0; r <= h - 2; ++r)
    boundary[r + h] = Rational(counter.p(h - 1, r));
  const Polynomial b(std::move(boundary));
  return Polynomial::one_minus_power(h - 1) * head + b;
}

}  // namespace

GeneratingFunction generating_function(Counter& counter, Family family,
                                       long long h) {
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  if (family == Family::balanced) {
    if (h == 0) return {Polynomial::constant(1), {1}};
    // s(L,1) = L: the single 1 can sit anywhere, so the column is X/(1-X)^2.
    if (h == 1) return {Polynomial::monomial(1), {1, 1}};
    return {balanced_numerator(counter, h), {h - 1, h, h + 1}};
  }
  if (h == 0) return {Polynomial::constant(1), {1}};
  if (h == 1) return {Polynomial::monomial(1), {2}};
  return {palindrome_numerator(counter, h), {h - 1, h + 1}};
}

}  // namespace balseg
