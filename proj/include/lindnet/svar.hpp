#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lindnet/network.hpp"

namespace lindnet {

// Vector autoregressive model with exogenous inputs, X(s)y = Q(s)u, in the
// validated form: the leading row coefficient matrix of X has ones on its
// main diagonal and full rank, and every Q row degree is bounded by the row
// lag, so each channel is proper.
class SvarModel {
 public:
  // Computes the per-row lags and checks the model structure. Failures are
  // reported distinctly: Error(non_monic_diagonal) when a diagonal leading
  // coefficient is not 1 (or a row of X vanishes), Error(singular_leading_matrix)
  // when the leading row coefficient matrix drops rank, and
  // Error(improper_input_channel) when a Q row degree exceeds its lag.
  // Names default to y1..yN and u1..um.
  static SvarModel validate(PolyMatrix x, PolyMatrix q,
                            std::vector<std::string> output_names = {},
                            std::vector<std::string> input_names = {});

  std::size_t output_count() const { return x_.rows(); }
  std::size_t input_count() const { return q_.cols(); }
  const PolyMatrix& x() const { return x_; }
  const PolyMatrix& q() const { return q_; }
  const std::vector<int>& lags() const { return lags_; }
  const std::vector<std::string>& output_names() const { return output_names_; }
  const std::vector<std::string>& input_names() const { return input_names_; }

 private:
  SvarModel(PolyMatrix x, PolyMatrix q, std::vector<int> lags,
            std::vector<std::string> output_names,
            std::vector<std::string> input_names);

  PolyMatrix x_;
  PolyMatrix q_;
  std::vector<int> lags_;
  std::vector<std::string> output_names_;
  std::vector<std::string> input_names_;
};

// The network induced by the model rows: N single-row components over
// scalar output blocks plus one input block of width m (dropped when
// m = 0). signal_names, when given, renames the blocks (N + 1 entries, or N
// when m = 0); the defaults are the model's output names and "u".
Network to_network(const SvarModel& model,
                   std::vector<std::string> signal_names = {});

struct SvarConversion {
  SvarModel model;
  // Column k of col(y, u) is network column permutation[k].
  std::vector<std::size_t> permutation;
};

// Represents a network of single-output components in regular feedback
// interconnection as a validated model. Output columns are the
// lexicographically smallest set on which the stacked leading row
// coefficient matrix is nonsingular; the component-to-output assignment
// maximizes total entry degree (deterministic lowest-index tie-break), and
// rows are rescaled so each diagonal entry is monic.
// Throws Error(component_not_single_output) or Error(not_regular_feedback)
// when the respective hypothesis fails.
SvarConversion from_network(const Network& net);

}  // namespace lindnet
