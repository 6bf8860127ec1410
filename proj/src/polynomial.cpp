#include "balseg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace balseg {

namespace {
const Rational rational_zero = 0;
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& value) {
  return Polynomial({value});
}

Polynomial Polynomial::monomial(long long k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("monomial degree is negative");
  std::vector<Rational> cs(k + 1, rational_zero);
  cs[k] = c;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::one_minus_power(long long k) {
  if (k < 1) throw std::invalid_argument("factor order must be positive");
  std::vector<Rational> cs(k + 1, rational_zero);
  cs[0] = 1;
  cs[k] = -1;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

const Rational& Polynomial::coefficient(long long i) const {
  if (i < 0 || i >= static_cast<long long>(coefficients_.size()))
    return rational_zero;
  return coefficients_[i];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    value = value * x + *it;
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coefficients_.size() > coefficients_.size())
    coefficients_.resize(o.coefficients_.size(), rational_zero);
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i)
    coefficients_[i] += o.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coefficients_.size() > coefficients_.size())
    coefficients_.resize(o.coefficients_.size(), rational_zero);
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i)
    coefficients_[i] -= o.coefficients_[i];
  trim();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coefficients_.size() + b.coefficients_.size() - 1,
                           rational_zero);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      cs[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial(std::move(cs));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.coefficients_.size() == b.coefficients_.size() &&
         std::equal(a.coefficients_.begin(), a.coefficients_.end(),
                    b.coefficients_.begin(),
                    [](const Rational& x, const Rational& y) {
                      return mpq_cmp(x.get_mpq_t(), y.get_mpq_t()) == 0;
                    });
}

}  // namespace balseg
