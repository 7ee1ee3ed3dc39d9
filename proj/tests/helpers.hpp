#pragma once

// Shared builders for randomized test fixtures. Everything is driven by the
// caller's engine so each test file controls its own determinism.

#include <random>
#include <vector>

#include "nftk/dataset.hpp"
#include "nftk/fuzzy.hpp"

namespace nftk::testing {

/// Structurally valid random FIS: mixed MF kinds, distinct antecedent tuples,
/// consequents in [-1, 1]. Rules enumerate the first tuples in mixed-radix
/// order, so any count up to the full product is valid.
inline Fis make_random_fis(std::mt19937_64& eng, int max_inputs = 3, int max_rules = 4,
                           int max_mfs_per_input = 2) {
  std::uniform_int_distribution<int> n_inputs_d(1, max_inputs);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Fis fis;
  fis.n_inputs = n_inputs_d(eng);
  std::vector<int> mf_counts;
  for (int i = 0; i < fis.n_inputs; ++i) {
    std::uniform_int_distribution<int> m_d(1, max_mfs_per_input);
    const int m = m_d(eng);
    mf_counts.push_back(m);
    std::vector<MembershipFunction> mfs;
    for (int j = 0; j < m; ++j) {
      if (unit(eng) < 0.5) {
        mfs.push_back(MembershipFunction::gaussian(0.15 + 0.4 * unit(eng), unit(eng)));
      } else {
        mfs.push_back(
            MembershipFunction::gbell(0.15 + 0.4 * unit(eng), 1.0 + 1.5 * unit(eng), unit(eng)));
      }
    }
    fis.input_mfs.push_back(std::move(mfs));
  }

  int total = 1;
  for (int m : mf_counts) total *= m;
  std::uniform_int_distribution<int> n_rules_d(1, std::min(total, max_rules));
  const int n_rules = n_rules_d(eng);
  for (int r = 0; r < n_rules; ++r) {
    std::vector<int> rule;
    int code = r;
    for (int i = 0; i < fis.n_inputs; ++i) {
      rule.push_back(code % mf_counts[static_cast<std::size_t>(i)]);
      code /= mf_counts[static_cast<std::size_t>(i)];
    }
    fis.rules.push_back(std::move(rule));
    RuleConsequent rc;
    rc.coefficients =
        VectorXd::NullaryExpr(fis.n_inputs, [&] { return 2.0 * unit(eng) - 1.0; });
    rc.constant = 2.0 * unit(eng) - 1.0;
    fis.consequents.push_back(std::move(rc));
  }
  fis.validate();
  return fis;
}

/// Uniform features over the unit box with targets in [-1, 1].
inline Dataset make_random_data(std::mt19937_64& eng, int n_inputs, Index rows) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MatrixXd X = MatrixXd::NullaryExpr(rows, n_inputs, [&] { return unit(eng); });
  VectorXd y = VectorXd::NullaryExpr(rows, [&] { return 2.0 * unit(eng) - 1.0; });
  return Dataset(std::move(X), std::move(y), {});
}

} // namespace nftk::testing
