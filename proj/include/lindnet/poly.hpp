#pragma once

#include <limits>
#include <string>
#include <vector>

#include "lindnet/rational.hpp"

namespace lindnet {

// Degree of the zero polynomial: a sentinel ordered below every integer.
inline constexpr int kDegMinusInf = std::numeric_limits<int>::min();

// Univariate polynomial over the rationals in the indeterminate s.
// coeffs()[k] is the coefficient of s^k; the highest stored coefficient is
// nonzero, and the zero polynomial stores no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long constant);
  explicit Poly(std::vector<Rational> coeffs);

  // coeff * s^power
  static Poly monomial(const Rational& coeff, int power);
  static Poly shift() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kDegMinusInf : static_cast<int>(coeffs_.size()) - 1;
  }
  // Coefficient of s^k; zero outside the stored range.
  Rational coeff(int k) const;
  Rational leading_coeff() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scale);

  // Multiplication by s^k.
  Poly shifted(int k) const;

  std::string str() const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& scale, Poly rhs) { return rhs *= scale; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Rational> coeffs_;

  void normalize();
};

// Exact quotient a / b in Q[s]; throws std::logic_error when b is zero or
// does not divide a (callers rely on guaranteed divisibility).
Poly div_exact(const Poly& a, const Poly& b);

}  // namespace lindnet
