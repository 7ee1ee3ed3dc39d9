#pragma once

#include <vector>

#include "nftk/dataset.hpp"
#include "nftk/fuzzy.hpp"

namespace nftk {

struct TrainConfig {
  int epochs = 10;
  double learning_rate = 0.01;
  double ridge_lambda = 1e-8;
  bool record_history = true;

  void validate() const;
};

/// Per-epoch RMSE record; test_rmse stays empty when no test set is given.
struct TrainHistory {
  std::vector<double> train_rmse;
  std::vector<double> test_rmse;
};

/// Exact (ridge-regularized) least squares on the consequent parameters with
/// the premise frozen. Returns a FIS differing only in its consequents.
/// Throws on a numerically singular system at lambda = 0.
Fis lse_consequents(const Fis& fis, const Dataset& train, double ridge_lambda);

/// Number of premise parameters, in canonical encoding order
/// (input-major, then MF-major, then per-MF parameter order).
int premise_param_count(const Fis& fis);

/// Analytic gradient of the training MSE with respect to every premise
/// parameter, in canonical encoding order.
VectorXd premise_gradients(const Fis& fis, const Dataset& train);

struct TrainResult {
  Fis fis;
  TrainHistory history;
};

/// Hybrid learning: per epoch, (1) exact LSE on consequents, (2) record the
/// epoch RMSE, (3) one gradient step on the premise parameters projected back
/// to width/shape >= kMinShapeParam. Returns the epoch snapshot with the
/// minimum train RMSE.
TrainResult train_anfis(const Fis& fis, const Dataset& train, const Dataset* test,
                        const TrainConfig& cfg);

} // namespace nftk
