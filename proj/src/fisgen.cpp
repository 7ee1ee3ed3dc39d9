#include "nftk/fisgen.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nftk/errors.hpp"

namespace nftk {

void GenConfig::validate() const {
  if (method == Method::grid) {
    if (mfs_per_input < 2) {
      throw ConfigError("grid partition needs at least 2 MFs per input");
    }
    if (rule_cap < 1) throw ConfigError("rule cap must be positive");
  } else {
    if (!(radius > 0.0 && radius <= 1.0)) {
      throw ConfigError("clustering radius must lie in (0, 1], got " +
                        std::to_string(radius));
    }
    if (!(reject_ratio < accept_ratio)) {
      throw ConfigError("reject_ratio must be below accept_ratio");
    }
  }
}

Fis grid_partition(const Dataset& d, const GenConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(d.cols());
  const int m = cfg.mfs_per_input;

  double rules_needed = 1.0;
  for (int i = 0; i < n; ++i) rules_needed *= m;
  if (rules_needed > static_cast<double>(cfg.rule_cap)) {
    throw ConfigError("grid partition would create " +
                      std::to_string(static_cast<long long>(rules_needed)) +
                      " rules (cap " + std::to_string(cfg.rule_cap) +
                      "); use the clustering method instead");
  }

  const double spacing = 1.0 / static_cast<double>(m - 1);
  std::vector<MembershipFunction> mfs;
  mfs.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    mfs.push_back(MembershipFunction::gbell(spacing / 2.0, 2.0,
                                            static_cast<double>(j) * spacing));
  }

  Fis fis;
  fis.n_inputs = n;
  fis.input_mfs.assign(static_cast<std::size_t>(n), mfs);

  // odometer over the full Cartesian product of MF indices
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  const int total = static_cast<int>(rules_needed);
  for (int r = 0; r < total; ++r) {
    fis.rules.push_back(tuple);
    fis.consequents.push_back({VectorXd::Zero(n), 0.0});
    for (int i = n - 1; i >= 0; --i) {
      auto& digit = tuple[static_cast<std::size_t>(i)];
      if (++digit < m) break;
      digit = 0;
    }
  }
  fis.validate();
  return fis;
}

std::vector<VectorXd> subtractive_clustering(const Dataset& d, const GenConfig& cfg) {
  cfg.validate();
  if (d.rows() == 0) throw DataError("subtractive_clustering: empty dataset");

  const MatrixXd& X = d.features();
  const Index n = X.rows();
  const double r = cfg.radius;
  const double alpha = 4.0 / (r * r);
  const double squash = 1.5 * r;
  const double beta = 4.0 / (squash * squash);

  // pairwise density potentials
  VectorXd potential = VectorXd::Zero(n);
  for (Index i = 0; i < n; ++i) {
    double p = 0.0;
    for (Index j = 0; j < n; ++j) {
      p += std::exp(-alpha * (X.row(i) - X.row(j)).squaredNorm());
    }
    potential[i] = p;
  }

  auto argmax = [&]() {
    Index best = 0;
    for (Index i = 1; i < n; ++i) {
      if (potential[i] > potential[best]) best = i;
    }
    return best;
  };

  const Index first = argmax();
  const double first_potential = potential[first];

  std::vector<Index> center_idx;
  std::vector<VectorXd> centers;
  auto accept = [&](Index idx) {
    center_idx.push_back(idx);
    centers.push_back(X.row(idx).transpose());
    const double peak = potential[idx];
    for (Index i = 0; i < n; ++i) {
      potential[i] -= peak * std::exp(-beta * (X.row(i) - X.row(idx)).squaredNorm());
    }
  };
  accept(first);

  while (static_cast<Index>(centers.size()) < n) {
    const Index cand = argmax();
    const double p = potential[cand];
    if (p < cfg.reject_ratio * first_potential) break;
    if (p >= cfg.accept_ratio * first_potential) {
      accept(cand);
      continue;
    }
    // gray zone: standard distance-ratio test against existing centers
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& c : centers) {
      dmin = std::min(dmin, (X.row(cand).transpose() - c).norm());
    }
    if (dmin / r + p / first_potential >= 1.0) {
      accept(cand);
    } else {
      potential[cand] = 0.0;
    }
  }
  return centers;
}

Fis fis_from_clusters(const Dataset& d, const std::vector<VectorXd>& centers,
                      const GenConfig& cfg) {
  if (centers.empty()) throw std::invalid_argument("fis_from_clusters: no centers");
  const int n = static_cast<int>(d.cols());
  for (const auto& c : centers) {
    if (c.size() != n) {
      throw std::invalid_argument("fis_from_clusters: center dimension mismatch");
    }
  }
  const int k = static_cast<int>(centers.size());
  const double sigma = cfg.radius / std::sqrt(8.0);

  Fis fis;
  fis.n_inputs = n;
  fis.input_mfs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < k; ++c) {
      fis.input_mfs[static_cast<std::size_t>(i)].push_back(
          MembershipFunction::gaussian(sigma, centers[static_cast<std::size_t>(c)][i]));
    }
  }

  // nearest-center assignment seeds each rule constant with a local mean
  std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
  std::vector<Index> counts(static_cast<std::size_t>(k), 0);
  for (Index s = 0; s < d.rows(); ++s) {
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      const double dist =
          (d.features().row(s).transpose() - centers[static_cast<std::size_t>(c)]).squaredNorm();
      if (dist < best_dist) {
        best_dist = dist;
        best = c;
      }
    }
    sums[static_cast<std::size_t>(best)] += d.targets()[s];
    counts[static_cast<std::size_t>(best)] += 1;
  }
  const double global_mean = d.rows() > 0 ? d.targets().mean() : 0.0;

  for (int c = 0; c < k; ++c) {
    fis.rules.push_back(std::vector<int>(static_cast<std::size_t>(n), c));
    const auto cc = static_cast<std::size_t>(c);
    const double constant = counts[cc] > 0 ? sums[cc] / static_cast<double>(counts[cc])
                                           : global_mean;
    fis.consequents.push_back({VectorXd::Zero(n), constant});
  }
  fis.validate();
  return fis;
}

Fis build_initial_fis(const Dataset& d, const GenConfig& cfg) {
  if (cfg.method == GenConfig::Method::grid) {
    return grid_partition(d, cfg);
  }
  return fis_from_clusters(d, subtractive_clustering(d, cfg), cfg);
}

} // namespace nftk
