#pragma once

#include <cstddef>
#include <vector>

#include "lindnet/poly.hpp"
#include "lindnet/rat_matrix.hpp"

namespace lindnet {

// Matrix over Q[s], row-major. Every structural invariant of a system is
// computed from one of these without ever leaving exact arithmetic.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Rows must be rectangular.
  explicit PolyMatrix(const std::vector<std::vector<Poly>>& rows);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  // Max entry degree of row i; kDegMinusInf on a zero row.
  int row_degree(std::size_t i) const;
  int max_entry_degree() const;

  std::vector<Poly> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Poly>& values);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

// Exact product; throws Error(dimension_mismatch) when shapes disagree.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

// Vertical stack; all parts must share the column count.
PolyMatrix vstack(const std::vector<PolyMatrix>& parts);

PolyMatrix select_columns(const PolyMatrix& m, const std::vector<std::size_t>& cols);
PolyMatrix select(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols);
PolyMatrix negated(const PolyMatrix& m);

// Exact determinant. Cofactor expansion below 4x4, fraction-free (Bareiss)
// elimination with exact polynomial division above. Throws on non-square
// input. The 0x0 determinant is 1.
Poly determinant(const PolyMatrix& m);
Poly determinant_cofactor(const PolyMatrix& m);
Poly determinant_bareiss(const PolyMatrix& m);

// Rank over the field of rational functions, by fraction-free elimination
// with full pivoting: the largest r such that some r x r minor is nonzero.
std::size_t normal_rank(const PolyMatrix& m);

// Maximum degree over all order x order minors; kDegMinusInf when they all
// vanish. Exhaustive over row and column subsets (desk scale). Throws
// Error(order_out_of_range) when order exceeds min(rows, cols).
int max_minor_degree(const PolyMatrix& m, std::size_t order);

// Certificate of a unimodular transform: u * u_inv = I exactly.
struct UnimodularCert {
  PolyMatrix u;
  PolyMatrix u_inv;
};

struct RowReduced {
  PolyMatrix reduced;
  UnimodularCert cert;
};

// Row-properization: reduced = cert.u * m, the nonzero rows of reduced have a
// leading-row-coefficient matrix of full row rank, zero rows stay in place,
// and the nonzero-row degrees of reduced sum to
// max_minor_degree(m, normal_rank(m)). Iteratively cancels top coefficients
// with rational left null vectors of the leading-row-coefficient matrix; the
// sum of row degrees strictly decreases, so termination is guaranteed.
RowReduced row_reduce(const PolyMatrix& m);

// Entry (i, j) = coefficient of s^(row degree of row i) in m[i][j].
// Throws Error(zero_row) when a row is identically zero.
RatMatrix leading_row_coeff(const PolyMatrix& m);

// 1 where the entry is a nonzero polynomial.
std::vector<std::vector<int>> sparsity(const PolyMatrix& m);

}  // namespace lindnet
