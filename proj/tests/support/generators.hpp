#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "lindnet/behavior.hpp"
#include "lindnet/error.hpp"
#include "lindnet/network.hpp"
#include "lindnet/poly_matrix.hpp"
#include "lindnet/svar.hpp"

namespace testgen {

using namespace lindnet;

inline Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

inline SignalSpace scalar_space(std::size_t q, const std::string& prefix = "w") {
  std::vector<SignalBlock> blocks;
  for (std::size_t i = 0; i < q; ++i) {
    blocks.push_back({prefix + std::to_string(i + 1), 1});
  }
  return SignalSpace(std::move(blocks));
}

inline Rational random_rational(std::mt19937& rng, int max_num = 6, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 6,
                                        int max_den = 3) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

inline Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> pick_deg(0, max_deg);
  const int deg = pick_deg(rng);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) {
    c[static_cast<std::size_t>(k)] = random_rational(rng, 3, 2);
  }
  c[static_cast<std::size_t>(deg)] = random_nonzero_rational(rng, 3, 2);
  return Poly(std::move(c));
}

// Entries are zero with probability zero_percent/100, otherwise random
// polynomials of degree <= max_deg. With dependent_rows, one row is
// overwritten by a polynomial combination of the others to exercise rank
// deficiency.
inline PolyMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                                std::size_t cols, int max_deg,
                                int zero_percent = 30,
                                bool dependent_rows = false) {
  std::uniform_int_distribution<int> percent(0, 99);
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (percent(rng) >= zero_percent) {
        m.at(i, j) = random_poly(rng, max_deg);
      }
    }
  }
  if (dependent_rows && rows >= 2 && percent(rng) < 50) {
    std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
    const std::size_t target = pick(rng);
    std::vector<Poly> combo(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == target) continue;
      const Poly factor = random_poly(rng, 1);
      for (std::size_t j = 0; j < cols; ++j) {
        combo[j] += factor * m.at(i, j);
      }
    }
    m.set_row(target, combo);
  }
  return m;
}

// Product of random elementary row operations applied to the identity:
// swaps, nonzero rational scalings, and polynomial row additions.
inline PolyMatrix random_unimodular(std::mt19937& rng, std::size_t n,
                                    int op_count = 6, int max_deg = 2) {
  PolyMatrix u = PolyMatrix::identity(n);
  if (n < 2) {
    if (n == 1) {
      u.at(0, 0) = Poly(random_nonzero_rational(rng, 3, 2));
    }
    return u;
  }
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < op_count; ++k) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    switch (op(rng)) {
      case 0:
        for (std::size_t c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
        break;
      case 1: {
        const Rational scale = random_nonzero_rational(rng, 2, 2);
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) = scale * u.at(i, c);
        break;
      }
      default: {
        const Poly factor = random_poly(rng, max_deg);
        for (std::size_t c = 0; c < n; ++c) {
          u.at(i, c) += factor * u.at(j, c);
        }
        break;
      }
    }
  }
  return u;
}

// Random validated model: monic diagonal lags, sparse off-diagonal entries
// that occasionally reach the lag degree, proper input channels. Retries
// until the leading row coefficient matrix is nonsingular.
inline SvarModel random_svar(std::mt19937& rng, std::size_t max_outputs = 4,
                             std::size_t max_inputs = 2, int max_lag = 3) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_outputs);
  std::uniform_int_distribution<std::size_t> pick_m(0, max_inputs);
  std::uniform_int_distribution<int> pick_lag(0, max_lag);
  std::uniform_int_distribution<int> percent(0, 99);
  for (;;) {
    const std::size_t n = pick_n(rng);
    const std::size_t m = pick_m(rng);
    std::vector<int> lags(n);
    for (auto& l : lags) l = pick_lag(rng);
    PolyMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> diag(static_cast<std::size_t>(lags[i]) + 1);
      for (int k = 0; k < lags[i]; ++k) {
        if (percent(rng) < 40) {
          diag[static_cast<std::size_t>(k)] = random_rational(rng, 3, 2);
        }
      }
      diag.back() = 1;
      x.at(i, i) = Poly(std::move(diag));
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || percent(rng) >= 35) continue;
        // off-diagonal degree at most the lag; sometimes exactly the lag so
        // the leading matrix is not just the identity
        const int cap = percent(rng) < 30 ? lags[i] : lags[i] - 1;
        if (cap < 0) continue;
        x.at(i, j) = random_poly(rng, cap);
      }
    }
    PolyMatrix q(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (percent(rng) < 55) {
          q.at(i, j) = random_poly(rng, lags[i]);
        }
      }
    }
    try {
      return SvarModel::validate(std::move(x), std::move(q));
    } catch (const Error&) {
      // singular leading matrix: draw again
    }
  }
}

}  // namespace testgen
