#pragma once

#include <vector>

#include "balseg/rational.hpp"

namespace balseg {

// Dense univariate polynomial over Q. Entry i of coefficients() is the
// coefficient of X^i; the zero polynomial stores nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& value);
  // c * X^k
  static Polynomial monomial(long long k, const Rational& c = 1);
  // 1 - X^k, k >= 1
  static Polynomial one_minus_power(long long k);

  bool is_zero() const { return coefficients_.empty(); }
  long long degree() const {
    return static_cast<long long>(coefficients_.size()) - 1;
  }
  // Zero outside the stored range.
  const Rational& coefficient(long long i) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

}  // namespace balseg
