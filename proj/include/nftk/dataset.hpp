#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nftk/types.hpp"

namespace nftk {

/// Original (min, max) of a feature column, recorded by normalize_minmax.
struct NormParams {
  double min = 0.0;
  double max = 1.0;
};

enum class TargetMode { selector, drinks };

/// Immutable sample matrix plus target vector. Values are safe to share
/// across threads once constructed.
class Dataset {
public:
  Dataset(MatrixXd features, VectorXd targets, std::vector<std::string> feature_names,
          std::vector<NormParams> norm_params = {});

  const MatrixXd& features() const { return features_; }
  const VectorXd& targets() const { return targets_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  /// Empty until normalize_minmax has been applied.
  const std::vector<NormParams>& norm_params() const { return norm_params_; }
  bool normalized() const { return !norm_params_.empty(); }

  Index rows() const { return features_.rows(); }
  Index cols() const { return features_.cols(); }

private:
  MatrixXd features_;
  VectorXd targets_;
  std::vector<std::string> feature_names_;
  std::vector<NormParams> norm_params_;
};

/// Holdout or k-fold split description. Identical seeds give identical splits.
struct SplitSpec {
  enum class Mode { holdout, kfold };
  Mode mode = Mode::holdout;
  double train_fraction = 0.7;
  int k = 5;
  std::uint64_t seed = 0;
};

/// Parse a BUPA liver-disorders file: one sample per line, 7 comma-separated
/// numeric fields (mcv, alkphos, sgpt, sgot, gammagt, drinks, selector).
///
/// selector mode: 6 feature columns, targets from field 7 remapped {1->0, 2->1}.
/// drinks mode:   5 feature columns, targets from field 6 as-is.
Dataset load_bupa(const std::string& path, TargetMode mode = TargetMode::selector);

/// Linearly map every feature column to [0, 1], recording the original
/// (min, max) per column. Constant columns are rejected.
Dataset normalize_minmax(const Dataset& raw);

/// Inverse of normalize_minmax using the recorded norm_params.
Dataset denormalize_minmax(const Dataset& normalized);

/// Seed-deterministic holdout split; |train| = round-half-up(fraction * n).
std::pair<Dataset, Dataset> split_holdout(const Dataset& d, const SplitSpec& spec);

/// Seed-deterministic k-fold split; test folds partition the indices and
/// differ in size by at most one.
std::vector<std::pair<Dataset, Dataset>> kfold(const Dataset& d, const SplitSpec& spec);

/// New dataset holding the given rows (in the given order).
Dataset select_rows(const Dataset& d, const std::vector<Index>& indices);

} // namespace nftk
