#include "lindnet/sim.hpp"

#include <algorithm>
#include <string>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

// Row-i equation of [p_part -q_part] anchored at base time t, evaluated on
// output window y and input window u. Zero for trajectories satisfying the
// equation.
Rational row_residual(const IOPartition& part, std::size_t i, std::size_t t,
                      const std::vector<std::vector<Rational>>& y,
                      const std::vector<std::vector<Rational>>& u) {
  Rational acc(0);
  for (std::size_t j = 0; j < part.p_part.cols(); ++j) {
    const Poly& p = part.p_part.at(i, j);
    for (int l = 0; l <= p.degree(); ++l) {
      acc += p.coeff(l) * y[t + static_cast<std::size_t>(l)][j];
    }
  }
  for (std::size_t j = 0; j < part.q_part.cols(); ++j) {
    const Poly& p = part.q_part.at(i, j);
    for (int l = 0; l <= p.degree(); ++l) {
      acc -= p.coeff(l) * u[t + static_cast<std::size_t>(l)][j];
    }
  }
  return acc;
}

}  // namespace

RatMatrix residual(const KernelRep& k, const Trajectory& traj) {
  if (!(traj.space == k.space)) {
    throw Error(Errc::signal_space_mismatch,
                "trajectory and kernel live over different signal spaces");
  }
  const int d = std::max(0, k.r.max_entry_degree());
  const std::size_t horizon = traj.horizon();
  if (horizon <= static_cast<std::size_t>(d)) {
    throw Error(Errc::horizon_too_short,
                "horizon " + std::to_string(horizon) +
                    " does not exceed the kernel degree " + std::to_string(d));
  }
  const std::size_t window = horizon - static_cast<std::size_t>(d);
  RatMatrix out(window, k.r.rows());
  for (std::size_t t = 0; t < window; ++t) {
    for (std::size_t i = 0; i < k.r.rows(); ++i) {
      Rational acc(0);
      for (std::size_t j = 0; j < k.r.cols(); ++j) {
        const Poly& p = k.r.at(i, j);
        for (int l = 0; l <= p.degree(); ++l) {
          acc += p.coeff(l) * traj.values[t + static_cast<std::size_t>(l)][j];
        }
      }
      out.at(t, i) = acc;
    }
  }
  return out;
}

Trajectory simulate(const IOPartition& part, const SignalSpace& space,
                    const std::vector<std::vector<Rational>>& input,
                    const std::vector<std::vector<Rational>>& initial,
                    std::size_t horizon) {
  const std::size_t p = part.output_cols.size();
  const std::size_t m = part.input_cols.size();
  if (!part.proper) {
    throw Error(Errc::improper_input_channel,
                "simulation requires a proper input-output partition");
  }
  if (part.p_part.rows() != p || part.p_part.cols() != p ||
      part.q_part.rows() != p || part.q_part.cols() != m ||
      p + m != space.q()) {
    throw Error(Errc::dimension_mismatch, "malformed input-output partition");
  }

  std::vector<int> row_deg(p);
  int tau = 0;
  for (std::size_t i = 0; i < p; ++i) {
    row_deg[i] = part.p_part.row_degree(i);
    if (row_deg[i] == kDegMinusInf) {
      throw Error(Errc::invalid_partition, "p_part has a zero row");
    }
    if (part.q_part.cols() > 0 && part.q_part.row_degree(i) > row_deg[i]) {
      throw Error(Errc::improper_input_channel,
                  "q_part row " + std::to_string(i) + " exceeds its p_part degree");
    }
    tau = std::max(tau, row_deg[i]);
  }
  const std::size_t tau_star = static_cast<std::size_t>(tau);

  if (horizon < std::max<std::size_t>(tau_star, 1)) {
    throw Error(Errc::horizon_too_short,
                "horizon must cover the initial window");
  }
  if (input.size() < horizon) {
    throw Error(Errc::horizon_too_short,
                "input supplies " + std::to_string(input.size()) +
                    " samples for a horizon of " + std::to_string(horizon));
  }
  for (const auto& row : input) {
    if (row.size() != m) {
      throw Error(Errc::dimension_mismatch, "input rows must have one value per input column");
    }
  }
  if (initial.size() != tau_star) {
    throw Error(Errc::dimension_mismatch,
                "initial window must supply exactly " + std::to_string(tau_star) +
                    " samples");
  }
  for (const auto& row : initial) {
    if (row.size() != p) {
      throw Error(Errc::dimension_mismatch,
                  "initial rows must have one value per output column");
    }
  }

  const auto gamma_inv = inverse(leading_row_coeff(part.p_part));
  if (!gamma_inv) {
    throw Error(Errc::invalid_partition,
                "the leading row coefficient matrix of p_part is singular");
  }

  std::vector<std::vector<Rational>> y = initial;
  y.reserve(horizon);

  // rows of lower degree constrain the supplied initial window
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t t = 0; t + static_cast<std::size_t>(row_deg[i]) < tau_star; ++t) {
      if (row_residual(part, i, t, y, input) != 0) {
        throw Error(Errc::inconsistent_initial_data,
                    "initial data violates row " + std::to_string(i + 1) +
                        " at time " + std::to_string(t));
      }
    }
  }

  for (std::size_t step = tau_star; step < horizon; ++step) {
    // row i anchored at base time step - row_deg[i]; the top coefficients
    // form the leading row coefficient matrix
    std::vector<Rational> b(p, Rational(0));
    for (std::size_t i = 0; i < p; ++i) {
      const std::size_t base = step - static_cast<std::size_t>(row_deg[i]);
      Rational acc(0);
      for (std::size_t j = 0; j < m; ++j) {
        const Poly& qp = part.q_part.at(i, j);
        for (int l = 0; l <= qp.degree(); ++l) {
          acc += qp.coeff(l) * input[base + static_cast<std::size_t>(l)][j];
        }
      }
      for (std::size_t j = 0; j < p; ++j) {
        const Poly& pp = part.p_part.at(i, j);
        for (int l = 0; l < row_deg[i]; ++l) {
          acc -= pp.coeff(l) * y[base + static_cast<std::size_t>(l)][j];
        }
      }
      b[i] = acc;
    }
    y.push_back(matvec(*gamma_inv, b));
  }

  Trajectory traj{space, std::vector<std::vector<Rational>>(
                             horizon, std::vector<Rational>(space.q(), Rational(0)))};
  for (std::size_t t = 0; t < horizon; ++t) {
    for (std::size_t k = 0; k < p; ++k) {
      traj.values[t][part.output_cols[k]] = y[t][k];
    }
    for (std::size_t k = 0; k < m; ++k) {
      traj.values[t][part.input_cols[k]] = input[t][k];
    }
  }
  return traj;
}

}  // namespace lindnet
