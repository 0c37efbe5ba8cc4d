#include "lindnet/poly.hpp"

#include <stdexcept>
#include <utility>

namespace lindnet {

Poly::Poly(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
  }
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::monomial(const Rational& coeff, int power) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading_coeff() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& scale) {
  if (scale == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) {
    c *= scale;
  }
  return *this;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) {
    return Poly();
  }
  if (k == 0) {
    return *this;
  }
  Poly out;
  out.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::string Poly::str() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) {
      out += format_rational(mag);
    }
    if (k > 0) {
      if (!unit) {
        out += "*";
      }
      out += "s";
      if (k > 1) {
        out += "^" + std::to_string(k);
      }
    }
  }
  return out;
}

Poly div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) {
    throw std::logic_error("polynomial division by zero");
  }
  if (a.is_zero()) {
    return Poly();
  }
  if (a.degree() < b.degree()) {
    throw std::logic_error("inexact polynomial division");
  }
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                             Rational(0));
  Poly rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int k = rem.degree() - b.degree();
    const Rational c = rem.leading_coeff() / b.leading_coeff();
    quot[static_cast<std::size_t>(k)] = c;
    rem -= Poly::monomial(c, k) * b;
  }
  if (!rem.is_zero()) {
    throw std::logic_error("inexact polynomial division");
  }
  return Poly(std::move(quot));
}

}  // namespace lindnet
