#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lindnet/rational.hpp"

namespace lindnet {

// Dense matrix over the rationals. Workhorse behind leading-coefficient
// tests, null vectors, and trajectory stepping.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

// Some nonzero v with v * m = 0, or nullopt when the rows are independent.
std::optional<std::vector<Rational>> left_null_vector(const RatMatrix& m);

// Any solution x of m * x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& x);

}  // namespace lindnet
