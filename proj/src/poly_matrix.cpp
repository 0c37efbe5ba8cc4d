#include "lindnet/poly_matrix.hpp"

#include <algorithm>
#include <utility>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] + (k - pos) < n) {
      ++idx[pos];
      for (std::size_t p = pos + 1; p < k; ++p) {
        idx[p] = idx[p - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  return idx;
}

}  // namespace

PolyMatrix::PolyMatrix(const std::vector<std::vector<Poly>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(Errc::dimension_mismatch, "ragged rows in polynomial matrix");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = Poly(1L);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!at(i, j).is_zero()) return false;
  }
  return true;
}

int PolyMatrix::row_degree(std::size_t i) const {
  int deg = kDegMinusInf;
  for (std::size_t j = 0; j < cols_; ++j) {
    deg = std::max(deg, at(i, j).degree());
  }
  return deg;
}

int PolyMatrix::max_entry_degree() const {
  int deg = kDegMinusInf;
  for (const auto& p : data_) {
    deg = std::max(deg, p.degree());
  }
  return deg;
}

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
  std::vector<Poly> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    out[j] = at(i, j);
  }
  return out;
}

void PolyMatrix::set_row(std::size_t i, const std::vector<Poly>& values) {
  for (std::size_t j = 0; j < cols_; ++j) {
    at(i, j) = values[j];
  }
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::dimension_mismatch, "matmul: inner dimensions disagree");
  }
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

PolyMatrix vstack(const std::vector<PolyMatrix>& parts) {
  std::size_t rows = 0;
  std::size_t cols = parts.empty() ? 0 : parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) {
      throw Error(Errc::dimension_mismatch, "vstack: column counts disagree");
    }
    rows += p.rows();
  }
  PolyMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i, ++r) {
      for (std::size_t j = 0; j < cols; ++j) {
        out.at(r, j) = p.at(i, j);
      }
    }
  }
  return out;
}

PolyMatrix select_columns(const PolyMatrix& m, const std::vector<std::size_t>& cols) {
  PolyMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = m.at(i, cols[j]);
    }
  }
  return out;
}

PolyMatrix select(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, j) = m.at(rows[i], cols[j]);
    }
  }
  return out;
}

PolyMatrix negated(const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.at(i, j) = -m.at(i, j);
    }
  }
  return out;
}

Poly determinant_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::non_square, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1L);
  if (n == 1) return m.at(0, 0);
  Poly det;
  std::vector<std::size_t> all_rows(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    all_rows[i - 1] = i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    cols.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (c != j) cols.push_back(c);
    }
    Poly term = m.at(0, j) * determinant_cofactor(select(m, all_rows, cols));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Poly determinant_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::non_square, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1L);
  PolyMatrix w = m;
  Poly prev(1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // full pivoting: first nonzero entry of the trailing submatrix
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (!w.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      return Poly();  // trailing block vanished: singular
    }
    if (pi != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(pi, j), w.at(k, j));
      negate = !negate;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, pj), w.at(i, k));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) =
            div_exact(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
      }
    }
    prev = w.at(k, k);
  }
  return negate ? -w.at(n - 1, n - 1) : w.at(n - 1, n - 1);
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::non_square, "determinant of a non-square matrix");
  }
  return m.rows() < 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

std::size_t normal_rank(const PolyMatrix& m) {
  PolyMatrix w = m;
  const std::size_t bound = std::min(m.rows(), m.cols());
  Poly prev(1L);
  std::size_t r = 0;
  for (std::size_t k = 0; k < bound; ++k) {
    std::size_t pi = m.rows(), pj = m.cols();
    for (std::size_t i = k; i < m.rows() && pi == m.rows(); ++i) {
      for (std::size_t j = k; j < m.cols(); ++j) {
        if (!w.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == m.rows()) {
      break;
    }
    if (pi != k) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(w.at(pi, j), w.at(k, j));
    }
    if (pj != k) {
      for (std::size_t i = 0; i < m.rows(); ++i) std::swap(w.at(i, pj), w.at(i, k));
    }
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        w.at(i, j) =
            div_exact(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
      }
      w.at(i, k) = Poly();
    }
    prev = w.at(k, k);
    ++r;
  }
  return r;
}

int max_minor_degree(const PolyMatrix& m, std::size_t order) {
  if (order > std::min(m.rows(), m.cols())) {
    throw Error(Errc::order_out_of_range, "minor order exceeds matrix shape");
  }
  if (order == 0) {
    return 0;  // the empty minor is 1
  }
  int best = kDegMinusInf;
  std::vector<std::size_t> rows = first_combination(order);
  do {
    std::vector<std::size_t> cols = first_combination(order);
    do {
      best = std::max(best, determinant(select(m, rows, cols)).degree());
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return best;
}

RowReduced row_reduce(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  RowReduced out{m, {PolyMatrix::identity(n), PolyMatrix::identity(n)}};
  PolyMatrix& red = out.reduced;
  PolyMatrix& u = out.cert.u;
  PolyMatrix& uinv = out.cert.u_inv;

  for (;;) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i) {
      if (!red.row_is_zero(i)) live.push_back(i);
    }
    if (live.empty()) break;

    RatMatrix lam(live.size(), red.cols());
    std::vector<int> deg(live.size());
    for (std::size_t a = 0; a < live.size(); ++a) {
      deg[a] = red.row_degree(live[a]);
      for (std::size_t j = 0; j < red.cols(); ++j) {
        lam.at(a, j) = red.at(live[a], j).coeff(deg[a]);
      }
    }
    const auto nullvec = left_null_vector(lam);
    if (!nullvec) break;  // leading row coefficient matrix has full row rank
    const std::vector<Rational>& v = *nullvec;

    // cancel the top coefficient of the highest-index participating row of
    // maximal degree
    int dmax = kDegMinusInf;
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (v[a] != 0) dmax = std::max(dmax, deg[a]);
    }
    std::size_t target = 0;
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (v[a] != 0 && deg[a] == dmax) target = a;
    }
    const std::size_t r = live[target];

    std::vector<Poly> new_row(red.cols());
    std::vector<Poly> new_u_row(n);
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (v[a] == 0) continue;
      const Poly factor = Poly::monomial(v[a], dmax - deg[a]);
      for (std::size_t j = 0; j < red.cols(); ++j) {
        new_row[j] += factor * red.at(live[a], j);
      }
      for (std::size_t j = 0; j < n; ++j) {
        new_u_row[j] += factor * u.at(live[a], j);
      }
    }

    // uinv := uinv * E^-1, which touches only column r:
    // E^-1 row r has 1/v[target] at column r and -(v[a]/v[target]) s^shift at
    // the other participating columns.
    const Rational pivot = v[target];
    for (std::size_t i = 0; i < n; ++i) {
      const Poly old = uinv.at(i, r);
      if (old.is_zero()) continue;
      for (std::size_t a = 0; a < live.size(); ++a) {
        if (a == target || v[a] == 0) continue;
        uinv.at(i, live[a]) -=
            old * Poly::monomial(v[a] / pivot, dmax - deg[a]);
      }
      uinv.at(i, r) = Rational(1) / pivot * old;
    }

    red.set_row(r, new_row);
    u.set_row(r, new_u_row);
  }
  return out;
}

RatMatrix leading_row_coeff(const PolyMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const int d = m.row_degree(i);
    if (d == kDegMinusInf) {
      throw Error(Errc::zero_row,
                  "leading row coefficient of a zero row (row " +
                      std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.at(i, j) = m.at(i, j).coeff(d);
    }
  }
  return out;
}

std::vector<std::vector<int>> sparsity(const PolyMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m.at(i, j).is_zero() ? 0 : 1;
    }
  }
  return out;
}

}  // namespace lindnet
