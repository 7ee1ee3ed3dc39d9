#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nftk/types.hpp"

namespace nftk {

/// Inertia-weight global-best PSO settings.
struct PsoConfig {
  int swarm_size = 25;
  int iterations = 500;
  double w_start = 0.9;  // inertia schedule, interpolated linearly
  double w_end = 0.5;
  double c1 = 2.0;  // cognitive constant
  double c2 = 2.0;  // social constant
  double v_max_fraction = 0.1;  // velocity clamp as a fraction of each range
  std::uint64_t seed = 0;

  void validate() const;
};

/// Per-dimension box bounds, lower < upper everywhere.
struct Bounds {
  VectorXd lower;
  VectorXd upper;

  Index dims() const { return lower.size(); }
  VectorXd range() const { return upper - lower; }
  VectorXd clip(VecRef v) const;
  void validate() const;
};

using Objective = std::function<double(const VectorXd&)>;

struct SwarmState {
  MatrixXd positions;   // particles x dims
  MatrixXd velocities;
  MatrixXd pbest_positions;
  VectorXd pbest_values;
  VectorXd gbest_position;
  double gbest_value = 0.0;
  int iteration = 0;
  std::vector<double> gbest_history;  // non-increasing, entry 0 from init
};

/// Uniform-random swarm inside the bounds; the first particles take the given
/// guesses (clipped) when provided. Velocities start at zero. Throws if the
/// objective is non-finite at any initial point.
SwarmState pso_init(const Objective& objective, const Bounds& bounds,
                    const PsoConfig& cfg, const std::vector<VectorXd>& guesses = {});

/// One synchronous swarm update. Per particle and dimension,
///   v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)
/// with fresh r1, r2 in [0, 1], v clamped to the velocity limit, positions
/// clipped to the bounds (zeroing the velocity on clipped dimensions).
/// Random draws come from a sub-generator derived from (seed, iteration,
/// particle), so evaluation order cannot change the trajectory. Non-finite
/// objective values are treated as +infinity and never become a best.
void pso_step(SwarmState& state, const Objective& objective, const Bounds& bounds,
              const PsoConfig& cfg, int iteration);

struct PsoResult {
  VectorXd best;
  double best_value = 0.0;
  std::vector<double> history;  // length iterations + 1
};

PsoResult pso_optimize(const Objective& objective, const Bounds& bounds,
                       const PsoConfig& cfg, const std::vector<VectorXd>& guesses = {});

} // namespace nftk
