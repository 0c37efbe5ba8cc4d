#include "lindnet/behavior.hpp"

#include <algorithm>
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

// v is in the Q[s]-row-span of a row-proper matrix with the given row
// degrees iff repeated top-degree cancellation drives it to zero (the
// predictable degree property bounds the cofactor degrees).
bool in_row_span(const PolyMatrix& row_proper, const std::vector<int>& row_degs,
                 std::vector<Poly> v) {
  const std::size_t q = row_proper.cols();
  for (;;) {
    int dv = kDegMinusInf;
    for (const auto& p : v) {
      dv = std::max(dv, p.degree());
    }
    if (dv == kDegMinusInf) {
      return true;
    }
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < row_proper.rows(); ++i) {
      if (row_degs[i] <= dv) usable.push_back(i);
    }
    if (usable.empty()) {
      return false;
    }
    // match the coefficient vector of v at s^dv against the leading rows
    RatMatrix a(q, usable.size());
    std::vector<Rational> b(q);
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < usable.size(); ++k) {
        a.at(j, k) = row_proper.at(usable[k], j).coeff(row_degs[usable[k]]);
      }
      b[j] = v[j].coeff(dv);
    }
    const auto lambda = solve(a, b);
    if (!lambda) {
      return false;
    }
    for (std::size_t k = 0; k < usable.size(); ++k) {
      if ((*lambda)[k] == 0) continue;
      const Poly factor =
          Poly::monomial((*lambda)[k], dv - row_degs[usable[k]]);
      for (std::size_t j = 0; j < q; ++j) {
        v[j] -= factor * row_proper.at(usable[k], j);
      }
    }
  }
}

bool rows_in_span(const PolyMatrix& outer, const PolyMatrix& row_proper) {
  std::vector<int> degs(row_proper.rows());
  for (std::size_t i = 0; i < row_proper.rows(); ++i) {
    degs[i] = row_proper.row_degree(i);
  }
  for (std::size_t i = 0; i < outer.rows(); ++i) {
    if (!in_row_span(row_proper, degs, outer.row(i))) {
      return false;
    }
  }
  return true;
}

}  // namespace

SignalSpace::SignalSpace(std::vector<SignalBlock> blocks)
    : blocks_(std::move(blocks)) {
  offsets_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.name.empty()) {
      throw Error(Errc::invalid_signal_space, "empty signal block name");
    }
    if (b.name.find_first_of(",\"\n") != std::string::npos) {
      throw Error(Errc::invalid_signal_space,
                  "signal name \"" + b.name + "\" contains a reserved character");
    }
    if (b.dim == 0) {
      throw Error(Errc::invalid_signal_space,
                  "signal block \"" + b.name + "\" has dimension 0");
    }
    offsets_.push_back(q_);
    q_ += b.dim;
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (blocks_[i].name == blocks_[j].name) {
        throw Error(Errc::invalid_signal_space,
                    "duplicate signal block name \"" + blocks_[i].name + "\"");
      }
    }
  }
}

std::size_t SignalSpace::block_index(const std::string& name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name == name) return i;
  }
  throw Error(Errc::unknown_block, "unknown signal block \"" + name + "\"");
}

std::vector<std::string> SignalSpace::column_names() const {
  std::vector<std::string> names;
  names.reserve(q_);
  for (const auto& b : blocks_) {
    if (b.dim == 1) {
      names.push_back(b.name);
    } else {
      for (std::size_t k = 0; k < b.dim; ++k) {
        names.push_back(b.name + "[" + std::to_string(k) + "]");
      }
    }
  }
  return names;
}

KernelRep::KernelRep(SignalSpace space_in, PolyMatrix r_in)
    : space(std::move(space_in)), r(std::move(r_in)) {
  if (r.cols() != space.q()) {
    throw Error(Errc::dimension_mismatch,
                "kernel representation has " + std::to_string(r.cols()) +
                    " columns for a signal space of dimension " +
                    std::to_string(space.q()));
  }
}

KernelRep minimal_kernel(const KernelRep& k) {
  const RowReduced rr = row_reduce(k.r);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rr.reduced.rows(); ++i) {
    if (!rr.reduced.row_is_zero(i)) keep.push_back(i);
  }
  std::vector<std::size_t> all_cols(rr.reduced.cols());
  for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
  return KernelRep(k.space, select(rr.reduced, keep, all_cols));
}

std::size_t output_cardinality(const KernelRep& k) { return normal_rank(k.r); }

int mcmillan_degree(const KernelRep& k) {
  const KernelRep minimal = minimal_kernel(k);
  if (minimal.r.rows() == 0) {
    return 0;
  }
  return max_minor_degree(minimal.r, minimal.r.rows());
}

bool is_unconstrained(const KernelRep& k, const std::string& block) {
  const std::size_t b = k.space.block_index(block);
  const std::size_t offset = k.space.block_offset(b);
  for (std::size_t j = offset; j < offset + k.space.blocks()[b].dim; ++j) {
    for (std::size_t i = 0; i < k.r.rows(); ++i) {
      if (!k.r.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> io_partition_candidates(const KernelRep& k) {
  const KernelRep minimal = minimal_kernel(k);
  const std::size_t p = minimal.r.rows();
  if (p == 0) {
    throw Error(Errc::no_outputs, "the behavior has no outputs (p = 0)");
  }
  std::vector<std::size_t> cols(p);
  for (std::size_t i = 0; i < p; ++i) cols[i] = i;
  int best = kDegMinusInf;
  std::vector<std::vector<std::size_t>> winners;
  do {
    const int deg = determinant(select_columns(minimal.r, cols)).degree();
    if (deg == kDegMinusInf) continue;
    if (deg > best) {
      best = deg;
      winners.clear();
    }
    if (deg == best) {
      winners.push_back(cols);
    }
  } while (next_combination(cols, minimal.r.cols()));
  return winners;
}

IOPartition io_partition(const KernelRep& k) {
  const KernelRep minimal = minimal_kernel(k);
  const std::size_t p = minimal.r.rows();
  if (p == 0) {
    throw Error(Errc::no_outputs, "the behavior has no outputs (p = 0)");
  }
  const std::vector<std::size_t> outputs = io_partition_candidates(k).front();
  std::vector<std::size_t> inputs;
  for (std::size_t j = 0; j < minimal.r.cols(); ++j) {
    if (!std::binary_search(outputs.begin(), outputs.end(), j)) {
      inputs.push_back(j);
    }
  }
  IOPartition part;
  part.output_cols = outputs;
  part.input_cols = inputs;
  part.p_part = select_columns(minimal.r, outputs);
  part.q_part = negated(select_columns(minimal.r, inputs));
  part.proper = true;
  return part;
}

bool is_behavior_equal(const KernelRep& a, const KernelRep& b) {
  if (a.space != b.space) {
    throw Error(Errc::signal_space_mismatch,
                "behaviors live over different signal spaces");
  }
  const KernelRep ma = minimal_kernel(a);
  const KernelRep mb = minimal_kernel(b);
  if (ma.r.rows() != mb.r.rows()) {
    return false;
  }
  return rows_in_span(ma.r, mb.r) && rows_in_span(mb.r, ma.r);
}

}  // namespace lindnet
