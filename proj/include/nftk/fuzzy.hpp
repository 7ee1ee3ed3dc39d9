#pragma once

#include <array>
#include <vector>

#include "nftk/dataset.hpp"
#include "nftk/types.hpp"

namespace nftk {

/// Firing-strength sums at or below this are treated as zero and replaced by
/// the uniform weight vector, keeping objectives finite wherever an optimizer
/// may roam.
inline constexpr double kZeroFiringEps = 1e-12;

/// Lower bound kept on widths and slope exponents by training projections.
inline constexpr double kMinShapeParam = 1e-3;

enum class MfKind { gaussian, gbell };

/// Parametric fuzzification curve.
///
/// gbell:    degree(x) = 1 / (1 + ((x - c) / a)^(2b)),  a = width, b = shape, c = center
/// gaussian: degree(x) = exp(-(x - c)^2 / (2 sigma^2)), sigma = width, c = center
struct MembershipFunction {
  MfKind kind = MfKind::gbell;
  double width = 1.0;  // bell a / gaussian sigma, > 0
  double shape = 2.0;  // bell slope exponent b, > 0; unused for gaussian
  double center = 0.0;

  static MembershipFunction gaussian(double sigma, double center);
  static MembershipFunction gbell(double a, double b, double c);

  /// 2 for gaussian (sigma, center), 3 for gbell (a, b, c).
  int param_count() const { return kind == MfKind::gaussian ? 2 : 3; }
};

bool operator==(const MembershipFunction& x, const MembershipFunction& y);

/// Membership degree in [0, 1]; exactly 1 at x == center.
double mf_eval(const MembershipFunction& mf, double x);

/// d(degree)/d(param) at x, in encoding order: gaussian {sigma, center},
/// gbell {a, b, c}. Unused slots are zero.
std::array<double, 3> mf_param_grad(const MembershipFunction& mf, double x);

/// Takagi-Sugeno rule output: coefficients . input + constant.
struct RuleConsequent {
  VectorXd coefficients;
  double constant = 0.0;
};

bool operator==(const RuleConsequent& x, const RuleConsequent& y);

/// Takagi-Sugeno system with product T-norm.
///
/// rules[r][i] indexes into input_mfs[i]; consequents pair with rules.
struct Fis {
  int n_inputs = 0;
  std::vector<std::vector<MembershipFunction>> input_mfs;
  std::vector<std::vector<int>> rules;
  std::vector<RuleConsequent> consequents;

  int n_rules() const { return static_cast<int>(rules.size()); }

  /// Throws std::invalid_argument on any structural violation: bad MF
  /// parameters, out-of-range antecedent indices, rule/consequent length
  /// mismatch, duplicate antecedent tuples.
  void validate() const;
};

bool operator==(const Fis& x, const Fis& y);

/// Layer-2 rule weights: product of antecedent membership degrees.
VectorXd firing_strengths(const Fis& fis, VecRef input);

/// Layer-3 normalization; all-zero input falls back to the uniform vector.
VectorXd normalize_weights(VecRef weights);

/// Layers 1-5: normalized-weight sum of rule outputs.
double fis_predict(const Fis& fis, VecRef input);

/// fis_predict over every row of X.
VectorXd fis_predict_batch(const Fis& fis, const MatrixXd& X);

double fis_mse(const Fis& fis, const Dataset& d);
double fis_rmse(const Fis& fis, const Dataset& d);

} // namespace nftk
