#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nftk/types.hpp"

namespace nftk {

/// Binary counts; positive class is the encoded target 1 (liver disorder).
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + fp + tn + fn; }
};

/// 1 if output >= threshold, else 0. Throws on non-finite output.
int classify(double output, double threshold = 0.5);

/// Threshold a whole prediction vector.
std::vector<int> classify_all(VecRef outputs, double threshold = 0.5);

/// Interpret 0/1-valued targets as classes; anything else is rejected.
std::vector<int> to_classes(VecRef targets);

ConfusionMatrix confusion(const std::vector<int>& predictions,
                          const std::vector<int>& labels);

/// Rates with zero denominators are reported as absent, never as 0 or 1.
struct MetricsSummary {
  double accuracy = 0.0;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
};

/// accuracy = (tp+tn)/total, sensitivity = tp/(tp+fn), specificity = tn/(tn+fp).
/// Throws on an empty matrix.
MetricsSummary summarize(const ConfusionMatrix& cm);

/// Aligned plain-text table of the counts and rates.
std::string metrics_table(const ConfusionMatrix& cm, const MetricsSummary& s);

} // namespace nftk
