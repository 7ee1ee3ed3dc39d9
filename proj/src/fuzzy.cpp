#include "nftk/fuzzy.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace nftk {

MembershipFunction MembershipFunction::gaussian(double sigma, double center) {
  MembershipFunction mf;
  mf.kind = MfKind::gaussian;
  mf.width = sigma;
  mf.shape = 0.0;
  mf.center = center;
  return mf;
}

MembershipFunction MembershipFunction::gbell(double a, double b, double c) {
  MembershipFunction mf;
  mf.kind = MfKind::gbell;
  mf.width = a;
  mf.shape = b;
  mf.center = c;
  return mf;
}

bool operator==(const MembershipFunction& x, const MembershipFunction& y) {
  if (x.kind != y.kind || x.width != y.width || x.center != y.center) return false;
  return x.kind == MfKind::gaussian || x.shape == y.shape;
}

bool operator==(const RuleConsequent& x, const RuleConsequent& y) {
  return x.constant == y.constant && x.coefficients.size() == y.coefficients.size() &&
         (x.coefficients.array() == y.coefficients.array()).all();
}

bool operator==(const Fis& x, const Fis& y) {
  return x.n_inputs == y.n_inputs && x.input_mfs == y.input_mfs && x.rules == y.rules &&
         x.consequents == y.consequents;
}

double mf_eval(const MembershipFunction& mf, double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("mf_eval: non-finite input");
  }
  const double u = x - mf.center;
  if (mf.kind == MfKind::gaussian) {
    return std::exp(-(u * u) / (2.0 * mf.width * mf.width));
  }
  // ((x-c)/a)^(2b) computed as (u^2/a^2)^b so the base is never negative
  const double v = (u * u) / (mf.width * mf.width);
  return 1.0 / (1.0 + std::pow(v, mf.shape));
}

std::array<double, 3> mf_param_grad(const MembershipFunction& mf, double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("mf_param_grad: non-finite input");
  }
  const double u = x - mf.center;
  if (mf.kind == MfKind::gaussian) {
    const double s = mf.width;
    const double mu = std::exp(-(u * u) / (2.0 * s * s));
    // d/d sigma, d/d center
    return {mu * u * u / (s * s * s), mu * u / (s * s), 0.0};
  }
  const double a = mf.width;
  const double b = mf.shape;
  const double v = (u * u) / (a * a);
  const double t = std::pow(v, b);
  const double mu = 1.0 / (1.0 + t);
  const double mu2 = mu * mu;

  // t = v^b:  dt/da = -2bt/a,  dt/db = t ln v,  dt/dc = -2b v^(b-1) u / a^2
  const double da = mu2 * 2.0 * b * t / a;
  const double db = v > 0.0 ? -mu2 * t * std::log(v) : 0.0;
  const double dc = v > 0.0 ? mu2 * 2.0 * b * std::pow(v, b - 1.0) * u / (a * a) : 0.0;
  return {da, db, dc};
}

void Fis::validate() const {
  if (n_inputs <= 0) throw std::invalid_argument("Fis: n_inputs must be positive");
  if (static_cast<int>(input_mfs.size()) != n_inputs) {
    throw std::invalid_argument("Fis: input_mfs size != n_inputs");
  }
  for (const auto& mfs : input_mfs) {
    if (mfs.empty()) throw std::invalid_argument("Fis: input without membership functions");
    for (const auto& mf : mfs) {
      if (!(mf.width > 0.0)) throw std::invalid_argument("Fis: MF width must be > 0");
      if (mf.kind == MfKind::gbell && !(mf.shape > 0.0)) {
        throw std::invalid_argument("Fis: bell slope exponent must be > 0");
      }
    }
  }
  if (rules.empty()) throw std::invalid_argument("Fis: at least one rule required");
  if (rules.size() != consequents.size()) {
    throw std::invalid_argument("Fis: rules and consequents must pair up");
  }
  std::set<std::vector<int>> seen;
  for (const auto& rule : rules) {
    if (static_cast<int>(rule.size()) != n_inputs) {
      throw std::invalid_argument("Fis: rule antecedent arity != n_inputs");
    }
    for (int i = 0; i < n_inputs; ++i) {
      const int mf = rule[static_cast<std::size_t>(i)];
      if (mf < 0 || mf >= static_cast<int>(input_mfs[static_cast<std::size_t>(i)].size())) {
        throw std::invalid_argument("Fis: antecedent MF index out of range");
      }
    }
    if (!seen.insert(rule).second) {
      throw std::invalid_argument("Fis: duplicate antecedent tuple");
    }
  }
  for (const auto& con : consequents) {
    if (con.coefficients.size() != n_inputs) {
      throw std::invalid_argument("Fis: consequent coefficient length != n_inputs");
    }
  }
}

VectorXd firing_strengths(const Fis& fis, VecRef input) {
  if (input.size() != fis.n_inputs) {
    throw std::invalid_argument("firing_strengths: input length " +
                                std::to_string(input.size()) + " != n_inputs " +
                                std::to_string(fis.n_inputs));
  }
  VectorXd w(fis.n_rules());
  for (int r = 0; r < fis.n_rules(); ++r) {
    double prod = 1.0;
    const auto& rule = fis.rules[static_cast<std::size_t>(r)];
    for (int i = 0; i < fis.n_inputs; ++i) {
      const auto& mf =
          fis.input_mfs[static_cast<std::size_t>(i)][static_cast<std::size_t>(rule[static_cast<std::size_t>(i)])];
      prod *= mf_eval(mf, input[i]);
    }
    w[r] = prod;
  }
  return w;
}

VectorXd normalize_weights(VecRef weights) {
  if (weights.size() == 0) {
    throw std::invalid_argument("normalize_weights: empty vector");
  }
  const double sum = weights.sum();
  if (sum <= kZeroFiringEps) {
    return VectorXd::Constant(weights.size(), 1.0 / static_cast<double>(weights.size()));
  }
  return weights / sum;
}

double fis_predict(const Fis& fis, VecRef input) {
  const VectorXd wn = normalize_weights(firing_strengths(fis, input));
  double out = 0.0;
  for (int r = 0; r < fis.n_rules(); ++r) {
    const auto& con = fis.consequents[static_cast<std::size_t>(r)];
    out += wn[r] * (con.coefficients.dot(input) + con.constant);
  }
  return out;
}

VectorXd fis_predict_batch(const Fis& fis, const MatrixXd& X) {
  VectorXd out(X.rows());
  for (Index s = 0; s < X.rows(); ++s) {
    out[s] = fis_predict(fis, X.row(s).transpose());
  }
  return out;
}

double fis_mse(const Fis& fis, const Dataset& d) {
  if (d.rows() == 0) throw std::invalid_argument("fis_mse: empty dataset");
  if (d.cols() != fis.n_inputs) {
    throw std::invalid_argument("fis_mse: dataset width != n_inputs");
  }
  const VectorXd residual = fis_predict_batch(fis, d.features()) - d.targets();
  return residual.squaredNorm() / static_cast<double>(d.rows());
}

double fis_rmse(const Fis& fis, const Dataset& d) { return std::sqrt(fis_mse(fis, d)); }

} // namespace nftk
