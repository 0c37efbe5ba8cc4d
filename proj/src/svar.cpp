#include "lindnet/svar.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

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

constexpr long kForbidden = -1;

// Maximum-weight assignment of components to output columns; weights are
// entry degrees (zero entries forbidden). Returns the lexicographically
// smallest optimal assignment.
std::vector<std::size_t> max_weight_assignment(
    const std::vector<std::vector<long>>& weight) {
  const std::size_t n = weight.size();
  if (n > 20) {
    throw Error(Errc::invalid_network,
                "too many components for the exact output assignment");
  }
  // best[i][mask]: max total weight assigning components i..n-1 to the
  // columns outside mask; -1 when infeasible
  std::vector<std::vector<long>> best(
      n + 1, std::vector<long>(std::size_t(1) << n, kForbidden));
  std::fill(best[n].begin(), best[n].end(), 0L);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      long& slot = best[i][mask];
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::size_t(1) << j)) continue;
        if (weight[i][j] == kForbidden) continue;
        const long rest = best[i + 1][mask | (std::size_t(1) << j)];
        if (rest == kForbidden) continue;
        slot = std::max(slot, weight[i][j] + rest);
      }
    }
  }
  std::vector<std::size_t> assign(n);
  std::size_t mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t(1) << j)) continue;
      if (weight[i][j] == kForbidden) continue;
      const long rest = best[i + 1][mask | (std::size_t(1) << j)];
      if (rest != kForbidden && weight[i][j] + rest == best[i][mask]) {
        assign[i] = j;
        mask |= std::size_t(1) << j;
        break;
      }
    }
  }
  return assign;
}

}  // namespace

SvarModel::SvarModel(PolyMatrix x, PolyMatrix q, std::vector<int> lags,
                     std::vector<std::string> output_names,
                     std::vector<std::string> input_names)
    : x_(std::move(x)),
      q_(std::move(q)),
      lags_(std::move(lags)),
      output_names_(std::move(output_names)),
      input_names_(std::move(input_names)) {}

SvarModel SvarModel::validate(PolyMatrix x, PolyMatrix q,
                              std::vector<std::string> output_names,
                              std::vector<std::string> input_names) {
  if (x.rows() != x.cols()) {
    throw Error(Errc::non_square, "X must be square");
  }
  const std::size_t n = x.rows();
  if (n == 0) {
    throw Error(Errc::non_square, "X must have at least one row");
  }
  if (q.rows() != n) {
    throw Error(Errc::dimension_mismatch, "Q must have one row per output");
  }
  std::vector<int> lags(n);
  for (std::size_t i = 0; i < n; ++i) {
    lags[i] = x.row_degree(i);
    if (lags[i] == kDegMinusInf) {
      throw Error(Errc::non_monic_diagonal,
                  "row " + std::to_string(i + 1) + " of X is zero");
    }
  }
  const RatMatrix leading = leading_row_coeff(x);
  for (std::size_t i = 0; i < n; ++i) {
    if (leading.at(i, i) != 1) {
      throw Error(Errc::non_monic_diagonal,
                  "diagonal leading coefficient of row " + std::to_string(i + 1) +
                      " is " + format_rational(leading.at(i, i)) + ", not 1");
    }
  }
  if (rank(leading) != n) {
    throw Error(Errc::singular_leading_matrix,
                "the leading row coefficient matrix of X is singular");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q.row_degree(i) > lags[i]) {
      throw Error(Errc::improper_input_channel,
                  "row " + std::to_string(i + 1) + " of Q has degree " +
                      std::to_string(q.row_degree(i)) + " above the lag " +
                      std::to_string(lags[i]));
    }
  }
  const std::size_t m = q.cols();
  if (output_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      output_names.push_back("y" + std::to_string(i + 1));
    }
  }
  if (input_names.empty()) {
    for (std::size_t j = 0; j < m; ++j) {
      input_names.push_back("u" + std::to_string(j + 1));
    }
  }
  if (output_names.size() != n || input_names.size() != m) {
    throw Error(Errc::dimension_mismatch, "name counts do not match the model");
  }
  return SvarModel(std::move(x), std::move(q), std::move(lags),
                   std::move(output_names), std::move(input_names));
}

Network to_network(const SvarModel& model, std::vector<std::string> signal_names) {
  const std::size_t n = model.output_count();
  const std::size_t m = model.input_count();
  const std::size_t block_count = n + (m > 0 ? 1 : 0);
  if (signal_names.empty()) {
    signal_names = model.output_names();
    if (m > 0) {
      signal_names.push_back("u");
    }
  }
  if (signal_names.size() != block_count) {
    throw Error(Errc::dimension_mismatch,
                "expected " + std::to_string(block_count) + " signal names");
  }
  std::vector<SignalBlock> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    blocks.push_back({signal_names[i], 1});
  }
  if (m > 0) {
    blocks.push_back({signal_names[n], m});
  }
  const SignalSpace space(std::move(blocks));
  std::vector<KernelRep> components;
  components.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix row(1, n + m);
    for (std::size_t j = 0; j < n; ++j) {
      row.at(0, j) = model.x().at(i, j);
    }
    for (std::size_t j = 0; j < m; ++j) {
      row.at(0, n + j) = -model.q().at(i, j);
    }
    components.emplace_back(space, std::move(row));
  }
  std::vector<std::string> component_names(signal_names.begin(),
                                           signal_names.begin() + n);
  return Network(space, std::move(components), std::move(component_names));
}

SvarConversion from_network(const Network& net) {
  const std::size_t n = net.size();
  const std::size_t q = net.space().q();

  std::vector<PolyMatrix> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const KernelRep minimal = minimal_kernel(net.components()[i]);
    if (minimal.r.rows() != 1) {
      throw Error(Errc::component_not_single_output,
                  "component \"" + net.names()[i] + "\" has output cardinality " +
                      std::to_string(minimal.r.rows()) + ", expected 1");
    }
    rows.push_back(minimal.r);
  }
  if (!is_regular_feedback(net)) {
    throw Error(Errc::not_regular_feedback,
                "the network is not a regular feedback interconnection");
  }

  const PolyMatrix stack = vstack(rows);
  // regular feedback makes the stacked minimal rows row-proper, so a
  // nonsingular column selection of the leading matrix exists
  const RatMatrix leading = leading_row_coeff(stack);
  std::vector<std::size_t> outputs(n);
  for (std::size_t i = 0; i < n; ++i) outputs[i] = i;
  bool found = false;
  do {
    RatMatrix sub(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sub.at(i, j) = leading.at(i, outputs[j]);
      }
    }
    if (rank(sub) == n) {
      found = true;
      break;
    }
  } while (next_combination(outputs, q));
  if (!found) {
    throw Error(Errc::not_regular_feedback,
                "no nonsingular output selection exists");  // unreachable
  }

  // assign one output column to each component: maximize the total entry
  // degree; optimal assignments put every diagonal at its row degree
  std::vector<std::vector<long>> weight(n, std::vector<long>(n, kForbidden));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int deg = stack.at(i, outputs[j]).degree();
      if (deg != kDegMinusInf) {
        weight[i][j] = deg;
      }
    }
  }
  const std::vector<std::size_t> assign = max_weight_assignment(weight);
  std::vector<std::size_t> out_col(n);
  for (std::size_t i = 0; i < n; ++i) {
    out_col[i] = outputs[assign[i]];
  }

  std::vector<std::size_t> in_col;
  for (std::size_t j = 0; j < q; ++j) {
    if (!std::binary_search(outputs.begin(), outputs.end(), j)) {
      in_col.push_back(j);
    }
  }
  const std::size_t m = in_col.size();

  PolyMatrix x(n, n);
  PolyMatrix qmat(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scale = Rational(1) / stack.at(i, out_col[i]).leading_coeff();
    for (std::size_t k = 0; k < n; ++k) {
      x.at(i, k) = scale * stack.at(i, out_col[k]);
    }
    for (std::size_t k = 0; k < m; ++k) {
      qmat.at(i, k) = Rational(-1) * scale * stack.at(i, in_col[k]);
    }
  }

  const std::vector<std::string> col_names = net.space().column_names();
  std::vector<std::string> out_names, in_names;
  for (std::size_t i = 0; i < n; ++i) out_names.push_back(col_names[out_col[i]]);
  for (std::size_t k = 0; k < m; ++k) in_names.push_back(col_names[in_col[k]]);

  std::vector<std::size_t> permutation = out_col;
  permutation.insert(permutation.end(), in_col.begin(), in_col.end());

  return SvarConversion{
      SvarModel::validate(std::move(x), std::move(qmat), std::move(out_names),
                          std::move(in_names)),
      std::move(permutation)};
}

}  // namespace lindnet
