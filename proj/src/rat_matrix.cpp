#include "lindnet/rat_matrix.hpp"

#include <algorithm>

namespace lindnet {

namespace {

// Reduced row echelon form with the accumulated row-operation matrix:
// ops * input = mat.
struct Echelon {
  RatMatrix mat;
  RatMatrix ops;
  std::vector<std::size_t> pivot_cols;
};

Echelon echelonize(const RatMatrix& input) {
  Echelon e{input, RatMatrix::identity(input.rows()), {}};
  std::size_t row = 0;
  for (std::size_t col = 0; col < input.cols() && row < input.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < input.rows() && e.mat.at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == input.rows()) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t j = 0; j < e.mat.cols(); ++j) {
        std::swap(e.mat.at(pivot, j), e.mat.at(row, j));
      }
      for (std::size_t j = 0; j < e.ops.cols(); ++j) {
        std::swap(e.ops.at(pivot, j), e.ops.at(row, j));
      }
    }
    const Rational lead = e.mat.at(row, col);
    for (std::size_t j = 0; j < e.mat.cols(); ++j) {
      e.mat.at(row, j) /= lead;
    }
    for (std::size_t j = 0; j < e.ops.cols(); ++j) {
      e.ops.at(row, j) /= lead;
    }
    for (std::size_t i = 0; i < input.rows(); ++i) {
      if (i == row || e.mat.at(i, col) == 0) continue;
      const Rational factor = e.mat.at(i, col);
      for (std::size_t j = 0; j < e.mat.cols(); ++j) {
        e.mat.at(i, j) -= factor * e.mat.at(row, j);
      }
      for (std::size_t j = 0; j < e.ops.cols(); ++j) {
        e.ops.at(i, j) -= factor * e.ops.at(row, j);
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& v) { return v == 0; });
}

std::size_t rank(const RatMatrix& m) { return echelonize(m).pivot_cols.size(); }

std::optional<std::vector<Rational>> left_null_vector(const RatMatrix& m) {
  const Echelon e = echelonize(m);
  const std::size_t r = e.pivot_cols.size();
  if (r == m.rows()) {
    return std::nullopt;
  }
  // Row r of the echelon form is zero; the same combination of input rows.
  std::vector<Rational> v(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    v[j] = e.ops.at(r, j);
  }
  return v;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      aug.at(i, j) = m.at(i, j);
    }
    aug.at(i, m.cols()) = b[i];
  }
  const Echelon e = echelonize(aug);
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    if (e.pivot_cols[k] == m.cols()) {
      return std::nullopt;  // pivot in the augmented column: inconsistent
    }
    x[e.pivot_cols[k]] = e.mat.at(k, m.cols());
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  const Echelon e = echelonize(m);
  if (e.pivot_cols.size() != m.rows()) {
    return std::nullopt;
  }
  return e.ops;
}

std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i] += m.at(i, j) * x[j];
    }
  }
  return out;
}

}  // namespace lindnet
