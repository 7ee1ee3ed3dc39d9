#include "nftk/anfis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nftk/errors.hpp"

namespace nftk {

void TrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  // Zero is a valid degenerate schedule: LSE passes with the premise frozen.
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning_rate must be finite and >= 0");
  }
  if (ridge_lambda < 0.0 || !std::isfinite(ridge_lambda)) {
    throw ConfigError("ridge_lambda must be finite and >= 0");
  }
}

namespace {

// Regressor row for one sample: per rule, normalized weight times [x, 1].
Eigen::RowVectorXd regressor_row(const Fis& fis, VecRef x) {
  const VectorXd wn = normalize_weights(firing_strengths(fis, x));
  const int n = fis.n_inputs;
  Eigen::RowVectorXd row(static_cast<Index>(fis.n_rules()) * (n + 1));
  for (int r = 0; r < fis.n_rules(); ++r) {
    row.segment(static_cast<Index>(r) * (n + 1), n) = wn[r] * x.transpose();
    row[static_cast<Index>(r) * (n + 1) + n] = wn[r];
  }
  return row;
}

} // namespace

Fis lse_consequents(const Fis& fis, const Dataset& train, double ridge_lambda) {
  if (train.rows() == 0) throw std::invalid_argument("lse_consequents: empty dataset");
  if (train.cols() != fis.n_inputs) {
    throw std::invalid_argument("lse_consequents: dataset width != n_inputs");
  }
  if (ridge_lambda < 0.0) {
    throw std::invalid_argument("lse_consequents: ridge_lambda must be >= 0");
  }

  const Index n_samples = train.rows();
  const int n = fis.n_inputs;
  const Index cols = static_cast<Index>(fis.n_rules()) * (n + 1);

  // stacked system [A; sqrt(lambda) I] theta = [y; 0]
  const Index aug_rows = n_samples + (ridge_lambda > 0.0 ? cols : 0);
  MatrixXd A = MatrixXd::Zero(aug_rows, cols);
  VectorXd y = VectorXd::Zero(aug_rows);
  for (Index s = 0; s < n_samples; ++s) {
    A.row(s) = regressor_row(fis, train.features().row(s).transpose());
    y[s] = train.targets()[s];
  }
  if (ridge_lambda > 0.0) {
    A.bottomRows(cols) = std::sqrt(ridge_lambda) * MatrixXd::Identity(cols, cols);
  }

  const Eigen::ColPivHouseholderQR<MatrixXd> qr(A);
  if (ridge_lambda == 0.0 && qr.rank() < cols) {
    throw std::runtime_error(
        "lse_consequents: singular least-squares system (rank " +
        std::to_string(qr.rank()) + " of " + std::to_string(cols) +
        "); set ridge_lambda > 0 to regularize");
  }
  const VectorXd theta = qr.solve(y);

  Fis out = fis;
  for (int r = 0; r < fis.n_rules(); ++r) {
    const Index base = static_cast<Index>(r) * (n + 1);
    out.consequents[static_cast<std::size_t>(r)].coefficients = theta.segment(base, n);
    out.consequents[static_cast<std::size_t>(r)].constant = theta[base + n];
  }
  return out;
}

int premise_param_count(const Fis& fis) {
  int count = 0;
  for (const auto& mfs : fis.input_mfs) {
    for (const auto& mf : mfs) count += mf.param_count();
  }
  return count;
}

VectorXd premise_gradients(const Fis& fis, const Dataset& train) {
  if (train.rows() == 0) throw std::invalid_argument("premise_gradients: empty dataset");
  if (train.cols() != fis.n_inputs) {
    throw std::invalid_argument("premise_gradients: dataset width != n_inputs");
  }

  const int n = fis.n_inputs;
  const int m = fis.n_rules();
  const Index n_samples = train.rows();

  // flat offsets per (input, mf) in canonical encoding order
  std::vector<std::vector<int>> offsets(static_cast<std::size_t>(n));
  int cursor = 0;
  for (int i = 0; i < n; ++i) {
    for (const auto& mf : fis.input_mfs[static_cast<std::size_t>(i)]) {
      offsets[static_cast<std::size_t>(i)].push_back(cursor);
      cursor += mf.param_count();
    }
  }

  VectorXd grad = VectorXd::Zero(cursor);
  MatrixXd degrees(m, n);   // antecedent membership degrees
  MatrixXd excl(m, n);      // firing-strength products excluding one input

  for (Index s = 0; s < n_samples; ++s) {
    const VectorXd x = train.features().row(s).transpose();

    for (int r = 0; r < m; ++r) {
      const auto& rule = fis.rules[static_cast<std::size_t>(r)];
      for (int i = 0; i < n; ++i) {
        const auto& mf = fis.input_mfs[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(rule[static_cast<std::size_t>(i)])];
        degrees(r, i) = mf_eval(mf, x[i]);
      }
      // prefix/suffix products give exact leave-one-out firing strengths
      double prefix = 1.0;
      for (int i = 0; i < n; ++i) {
        excl(r, i) = prefix;
        prefix *= degrees(r, i);
      }
      double suffix = 1.0;
      for (int i = n - 1; i >= 0; --i) {
        excl(r, i) *= suffix;
        suffix *= degrees(r, i);
      }
    }

    VectorXd w(m);
    for (int r = 0; r < m; ++r) w[r] = excl(r, 0) * degrees(r, 0);
    const double sum = w.sum();
    if (sum <= kZeroFiringEps) continue;  // uniform fallback region: flat in premises

    double yhat = 0.0;
    VectorXd rule_out(m);
    for (int r = 0; r < m; ++r) {
      const auto& con = fis.consequents[static_cast<std::size_t>(r)];
      rule_out[r] = con.coefficients.dot(x) + con.constant;
      yhat += (w[r] / sum) * rule_out[r];
    }
    const double de_dyhat =
        2.0 * (yhat - train.targets()[s]) / static_cast<double>(n_samples);

    for (int r = 0; r < m; ++r) {
      const double dyhat_dw = (rule_out[r] - yhat) / sum;
      const auto& rule = fis.rules[static_cast<std::size_t>(r)];
      for (int i = 0; i < n; ++i) {
        const double de_dmu = de_dyhat * dyhat_dw * excl(r, i);
        const int mf_index = rule[static_cast<std::size_t>(i)];
        const auto& mf = fis.input_mfs[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(mf_index)];
        const auto g = mf_param_grad(mf, x[i]);
        const int base = offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(mf_index)];
        for (int p = 0; p < mf.param_count(); ++p) {
          grad[base + p] += de_dmu * g[static_cast<std::size_t>(p)];
        }
      }
    }
  }
  return grad;
}

namespace {

void apply_premise_step(Fis& fis, const VectorXd& grad, double learning_rate) {
  int cursor = 0;
  for (auto& mfs : fis.input_mfs) {
    for (auto& mf : mfs) {
      if (mf.kind == MfKind::gaussian) {
        mf.width -= learning_rate * grad[cursor++];
        mf.center -= learning_rate * grad[cursor++];
        mf.width = std::max(mf.width, kMinShapeParam);
      } else {
        mf.width -= learning_rate * grad[cursor++];
        mf.shape -= learning_rate * grad[cursor++];
        mf.center -= learning_rate * grad[cursor++];
        mf.width = std::max(mf.width, kMinShapeParam);
        mf.shape = std::max(mf.shape, kMinShapeParam);
      }
    }
  }
}

} // namespace

TrainResult train_anfis(const Fis& fis, const Dataset& train, const Dataset* test,
                        const TrainConfig& cfg) {
  cfg.validate();
  fis.validate();

  Fis current = fis;
  Fis best = fis;
  double best_rmse = std::numeric_limits<double>::infinity();
  TrainHistory history;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    current = lse_consequents(current, train, cfg.ridge_lambda);

    const double train_rmse = fis_rmse(current, train);
    if (cfg.record_history) {
      history.train_rmse.push_back(train_rmse);
      if (test != nullptr) history.test_rmse.push_back(fis_rmse(current, *test));
    }
    if (train_rmse < best_rmse) {
      best_rmse = train_rmse;
      best = current;
    }

    const VectorXd grad = premise_gradients(current, train);
    apply_premise_step(current, grad, cfg.learning_rate);
  }
  return {std::move(best), std::move(history)};
}

} // namespace nftk
