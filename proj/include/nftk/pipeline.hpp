#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nftk/anfis.hpp"
#include "nftk/dataset.hpp"
#include "nftk/fisgen.hpp"
#include "nftk/fuzzy.hpp"
#include "nftk/metrics.hpp"
#include "nftk/pso.hpp"

namespace nftk {

/// Outcome of one method (anfis or anfis_pso) on one split.
struct MethodResult {
  Fis model;
  double train_rmse = 0.0;
  double test_rmse = 0.0;
  double train_mse = 0.0;
  double test_mse = 0.0;

  // selector mode only, computed on the test split
  std::optional<ConfusionMatrix> test_confusion;
  std::optional<MetricsSummary> test_metrics;

  TrainHistory history;             // per-epoch record (baseline path)
  std::vector<double> convergence;  // gbest history (pso path)

  std::string model_path;  // filled once the model file is written
};

/// One seed's results: metadata plus the ANFIS-PSO result and, when
/// requested, the plain-ANFIS baseline on the identical split.
struct ExperimentReport {
  std::uint64_t seed = 0;
  std::string config_digest;
  Index n_train = 0;
  Index n_test = 0;
  TargetMode target = TargetMode::selector;

  std::optional<MethodResult> anfis;
  MethodResult anfis_pso;
};

/// Plain hybrid-learning baseline from the generated initial FIS.
MethodResult run_anfis_baseline(const Dataset& train, const Dataset& test,
                                const GenConfig& gen, const TrainConfig& anfis_cfg,
                                TargetMode target);

/// The four-step procedure: build the initial FIS, PSO over the full encoded
/// parameter vector (one particle seeded at the initial FIS), one final LSE
/// pass on the PSO best, then keep the candidate with minimum train RMSE
/// among {initial, PSO best, PSO best + LSE}. pso_cfg.iterations == 0 skips
/// the swarm stage entirely.
ExperimentReport run_anfis_pso(const Dataset& train, const Dataset& test,
                               const GenConfig& gen, const PsoConfig& pso_cfg,
                               const TrainConfig& anfis_cfg, TargetMode target,
                               bool with_baseline = false);

} // namespace nftk
