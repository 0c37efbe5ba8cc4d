#pragma once

#include <stdexcept>
#include <string>

namespace lindnet {

// Error categories. The CLI maps parse_error to exit code 2 and everything
// else (violated preconditions, failed hypotheses) to exit code 1.
enum class Errc {
  dimension_mismatch,
  non_square,
  order_out_of_range,
  zero_row,
  unknown_block,
  invalid_signal_space,
  signal_space_mismatch,
  no_outputs,
  invalid_partition,
  invalid_network,
  non_monic_diagonal,
  singular_leading_matrix,
  improper_input_channel,
  component_not_single_output,
  not_regular_feedback,
  inconsistent_initial_data,
  horizon_too_short,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lindnet
