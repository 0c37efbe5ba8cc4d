#pragma once

#include <cstddef>
#include <vector>

#include "lindnet/behavior.hpp"
#include "lindnet/rat_matrix.hpp"

namespace lindnet {

// Finite window of a signal trajectory: row t is w(t).
struct Trajectory {
  SignalSpace space;
  std::vector<std::vector<Rational>> values;  // horizon x q

  std::size_t horizon() const { return values.size(); }
};

// Evaluates every kernel row at every base time where all shifted samples
// are in range: entry (t, i) = sum_j sum_l coeff(r[i][j], l) * w_j(t + l).
// The result has horizon - d rows, d being the maximal entry degree of k.r
// (taken as 0 for the zero matrix); all-zero iff the window is consistent
// with the kernel equations. Throws Error(horizon_too_short) when the
// horizon does not exceed d.
RatMatrix residual(const KernelRep& k, const Trajectory& traj);

// Forward simulation of a proper input-output system. The initial output
// window (tau* = max row degree of p_part samples) is explicit input; rows
// of lower degree also constrain that window and are checked, with
// Error(inconsistent_initial_data) naming the violated time and row. For
// each later time the (nonsingular) leading row coefficient matrix of
// p_part is solved exactly. input must supply at least `horizon` samples of
// the input columns; the result interleaves outputs and inputs in original
// column order.
Trajectory simulate(const IOPartition& part, const SignalSpace& space,
                    const std::vector<std::vector<Rational>>& input,
                    const std::vector<std::vector<Rational>>& initial,
                    std::size_t horizon);

}  // namespace lindnet
