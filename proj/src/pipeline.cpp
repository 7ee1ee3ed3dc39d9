#include "nftk/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "nftk/codec.hpp"

namespace nftk {

namespace {

void check_split(const Dataset& train, const Dataset& test) {
  if (train.cols() != test.cols()) {
    throw std::invalid_argument("train and test splits have different feature counts");
  }
  if (train.rows() == 0 || test.rows() == 0) {
    throw std::invalid_argument("train and test splits must both be non-empty");
  }
}

MethodResult evaluate_method(Fis model, const Dataset& train, const Dataset& test,
                             TargetMode target) {
  MethodResult mr;
  mr.train_mse = fis_mse(model, train);
  mr.test_mse = fis_mse(model, test);
  mr.train_rmse = std::sqrt(mr.train_mse);
  mr.test_rmse = std::sqrt(mr.test_mse);
  if (target == TargetMode::selector) {
    const VectorXd outputs = fis_predict_batch(model, test.features());
    const ConfusionMatrix cm = confusion(classify_all(outputs), to_classes(test.targets()));
    mr.test_confusion = cm;
    mr.test_metrics = summarize(cm);
  }
  mr.model = std::move(model);
  return mr;
}

} // namespace

MethodResult run_anfis_baseline(const Dataset& train, const Dataset& test,
                                const GenConfig& gen, const TrainConfig& anfis_cfg,
                                TargetMode target) {
  gen.validate();
  anfis_cfg.validate();
  check_split(train, test);

  const Fis initial = build_initial_fis(train, gen);
  TrainResult trained = train_anfis(initial, train, &test, anfis_cfg);
  MethodResult mr = evaluate_method(std::move(trained.fis), train, test, target);
  mr.history = std::move(trained.history);
  return mr;
}

ExperimentReport run_anfis_pso(const Dataset& train, const Dataset& test,
                               const GenConfig& gen, const PsoConfig& pso_cfg,
                               const TrainConfig& anfis_cfg, TargetMode target,
                               bool with_baseline) {
  gen.validate();
  pso_cfg.validate();
  anfis_cfg.validate();
  check_split(train, test);

  const Fis initial = build_initial_fis(train, gen);

  Fis best = initial;
  double best_rmse = fis_rmse(initial, train);
  std::vector<double> convergence;

  // Later candidates win ties, so an equally good refit replaces the raw FIS.
  auto consider = [&](Fis candidate) {
    const double rmse = fis_rmse(candidate, train);
    if (rmse <= best_rmse) {
      best = std::move(candidate);
      best_rmse = rmse;
    }
  };

  // The refit sees whatever premise shapes the swarm produced, including
  // near-degenerate ones that fire on a handful of samples; a stiffer ridge
  // floor keeps their consequents from exploding off the training support.
  const double refit_lambda = std::max(anfis_cfg.ridge_lambda, 1e-3);

  if (pso_cfg.iterations > 0) {
    const ParamVector encoded = encode_fis(initial);
    const Objective objective = [&initial, &train](const VectorXd& v) {
      return fis_rmse(decode_fis(initial, v).fis, train);
    };
    PsoResult swarm = pso_optimize(objective, encoded.bounds, pso_cfg, {encoded.values});
    convergence = std::move(swarm.history);

    Fis pso_best = decode_fis(initial, swarm.best).fis;
    Fis refit = lse_consequents(pso_best, train, refit_lambda);
    consider(std::move(pso_best));
    consider(std::move(refit));
  } else {
    consider(lse_consequents(initial, train, refit_lambda));
  }

  ExperimentReport report;
  report.seed = pso_cfg.seed;
  report.n_train = train.rows();
  report.n_test = test.rows();
  report.target = target;
  report.anfis_pso = evaluate_method(std::move(best), train, test, target);
  report.anfis_pso.convergence = std::move(convergence);
  if (with_baseline) {
    report.anfis = run_anfis_baseline(train, test, gen, anfis_cfg, target);
  }
  return report;
}

} // namespace nftk
