#pragma once

#include <vector>

#include "nftk/dataset.hpp"
#include "nftk/fuzzy.hpp"

namespace nftk {

/// Initial-FIS construction settings. Features must already be normalized
/// to [0, 1] for either method.
struct GenConfig {
  enum class Method { grid, clustering };
  Method method = Method::clustering;

  // grid
  int mfs_per_input = 2;
  int rule_cap = 256;

  // subtractive clustering, in normalized units
  double radius = 0.5;
  double accept_ratio = 0.5;
  double reject_ratio = 0.15;

  void validate() const;
};

/// Bell MFs evenly spaced over [0, 1] per input (half-width = half the center
/// spacing, slope 2), rules = full Cartesian product, zero consequents.
/// Rejects configurations whose rule count exceeds cfg.rule_cap.
Fis grid_partition(const Dataset& d, const GenConfig& cfg);

/// Density-potential center selection. Every returned center is a data point;
/// ties are broken toward the lowest sample index.
std::vector<VectorXd> subtractive_clustering(const Dataset& d, const GenConfig& cfg);

/// One rule per center: gaussian MFs (sigma = radius / sqrt(8)) centered on
/// the cluster coordinates, zero coefficients, constant seeded from the mean
/// target of the samples nearest that center.
Fis fis_from_clusters(const Dataset& d, const std::vector<VectorXd>& centers,
                      const GenConfig& cfg);

/// Dispatch on cfg.method.
Fis build_initial_fis(const Dataset& d, const GenConfig& cfg);

} // namespace nftk
