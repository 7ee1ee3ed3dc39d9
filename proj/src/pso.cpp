#include "nftk/pso.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <sstream>
#include <stdexcept>

#include "nftk/errors.hpp"
#include "nftk/rng.hpp"

namespace nftk {

void PsoConfig::validate() const {
  if (swarm_size < 2) throw ConfigError("swarm_size must be >= 2");
  if (iterations < 0) throw ConfigError("iterations must be >= 0");
  if (w_start < 0.0 || w_start > 1.2 || w_end < 0.0 || w_end > 1.2) {
    throw ConfigError("w_start and w_end must lie in [0, 1.2]");
  }
  if (w_start < w_end) throw ConfigError("w_start must be >= w_end");
  // Zero attraction is a valid degenerate setting (pure-inertia motion).
  if (c1 < 0.0 || c2 < 0.0) throw ConfigError("c1 and c2 must be >= 0");
  if (!(v_max_fraction > 0.0) || v_max_fraction > 1.0) {
    throw ConfigError("v_max_fraction must lie in (0, 1]");
  }
}

void Bounds::validate() const {
  if (lower.size() == 0) throw ConfigError("bounds are empty");
  if (lower.size() != upper.size()) throw ConfigError("bounds lower/upper lengths differ");
  for (Index d = 0; d < lower.size(); ++d) {
    if (!(lower[d] < upper[d])) {
      throw ConfigError("bounds must satisfy lower < upper in every dimension");
    }
  }
}

VectorXd Bounds::clip(VecRef v) const {
  return v.cwiseMax(lower).cwiseMin(upper);
}

namespace {

double evaluate(const Objective& objective, const VectorXd& x) {
  const double value = objective(x);
  return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

std::string format_point(const VectorXd& x) {
  std::ostringstream out;
  out << "[";
  for (Index d = 0; d < x.size(); ++d) out << (d ? ", " : "") << x[d];
  out << "]";
  return out.str();
}

void refresh_gbest(SwarmState& state) {
  Index best = 0;
  state.pbest_values.minCoeff(&best);
  state.gbest_value = state.pbest_values[best];
  state.gbest_position = state.pbest_positions.row(best).transpose();
}

double inertia_at(const PsoConfig& cfg, int iteration) {
  if (cfg.iterations <= 1) return cfg.w_start;
  const double t = static_cast<double>(iteration) / static_cast<double>(cfg.iterations - 1);
  return cfg.w_start + (cfg.w_end - cfg.w_start) * t;
}

} // namespace

SwarmState pso_init(const Objective& objective, const Bounds& bounds,
                    const PsoConfig& cfg, const std::vector<VectorXd>& guesses) {
  cfg.validate();
  bounds.validate();

  const Index dims = bounds.dims();
  SwarmState state;
  state.positions.resize(cfg.swarm_size, dims);
  state.velocities = MatrixXd::Zero(cfg.swarm_size, dims);

  for (int p = 0; p < cfg.swarm_size; ++p) {
    rng::Engine eng(rng::derive_seed(cfg.seed, 0, static_cast<std::uint64_t>(p)));
    for (Index d = 0; d < dims; ++d) {
      state.positions(p, d) = rng::uniform_range(eng, bounds.lower[d], bounds.upper[d]);
    }
  }
  for (std::size_t g = 0; g < guesses.size() && g < static_cast<std::size_t>(cfg.swarm_size); ++g) {
    if (guesses[g].size() != dims) {
      throw ConfigError("initial guess dimension does not match the bounds");
    }
    state.positions.row(static_cast<Index>(g)) = bounds.clip(guesses[g]).transpose();
  }

  state.pbest_positions = state.positions;
  state.pbest_values.resize(cfg.swarm_size);
  for (int p = 0; p < cfg.swarm_size; ++p) {
    const VectorXd x = state.positions.row(p).transpose();
    const double value = objective(x);
    if (!std::isfinite(value)) {
      throw std::runtime_error("pso_init: objective is non-finite at initial point " +
                               format_point(x));
    }
    state.pbest_values[p] = value;
  }
  refresh_gbest(state);
  state.iteration = 0;
  state.gbest_history.push_back(state.gbest_value);
  return state;
}

void pso_step(SwarmState& state, const Objective& objective, const Bounds& bounds,
              const PsoConfig& cfg, int iteration) {
  const Index dims = bounds.dims();
  const double w = inertia_at(cfg, iteration);
  const VectorXd v_max = cfg.v_max_fraction * bounds.range();

  // All particles move against the same gbest snapshot; bests update afterward.
  const VectorXd gbest = state.gbest_position;
  for (int p = 0; p < cfg.swarm_size; ++p) {
    rng::Engine eng(rng::derive_seed(cfg.seed, static_cast<std::uint64_t>(iteration) + 1,
                                     static_cast<std::uint64_t>(p)));
    for (Index d = 0; d < dims; ++d) {
      const double r1 = rng::uniform01(eng);
      const double r2 = rng::uniform01(eng);
      double v = w * state.velocities(p, d) +
                 cfg.c1 * r1 * (state.pbest_positions(p, d) - state.positions(p, d)) +
                 cfg.c2 * r2 * (gbest[d] - state.positions(p, d));
      v = std::clamp(v, -v_max[d], v_max[d]);
      double x = state.positions(p, d) + v;
      if (x < bounds.lower[d]) {
        x = bounds.lower[d];
        v = 0.0;
      } else if (x > bounds.upper[d]) {
        x = bounds.upper[d];
        v = 0.0;
      }
      state.velocities(p, d) = v;
      state.positions(p, d) = x;
    }
  }

  for (int p = 0; p < cfg.swarm_size; ++p) {
    const VectorXd x = state.positions.row(p).transpose();
    const double value = evaluate(objective, x);
    if (value < state.pbest_values[p]) {
      state.pbest_values[p] = value;
      state.pbest_positions.row(p) = x.transpose();
    }
  }
  refresh_gbest(state);
  state.iteration = iteration + 1;
  state.gbest_history.push_back(state.gbest_value);
}

PsoResult pso_optimize(const Objective& objective, const Bounds& bounds,
                       const PsoConfig& cfg, const std::vector<VectorXd>& guesses) {
  SwarmState state = pso_init(objective, bounds, cfg, guesses);
  for (int it = 0; it < cfg.iterations; ++it) {
    pso_step(state, objective, bounds, cfg, it);
  }
  return {state.gbest_position, state.gbest_value, state.gbest_history};
}

} // namespace nftk
