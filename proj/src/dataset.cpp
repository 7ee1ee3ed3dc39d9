#include "nftk/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "nftk/errors.hpp"
#include "nftk/rng.hpp"

namespace nftk {

namespace {

constexpr int kBupaFieldCount = 7;

const std::vector<std::string> kBupaFieldNames = {
    "mcv", "alkphos", "sgpt", "sgot", "gammagt", "drinks", "selector"};

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_field(std::string_view token, int line_no, int field_no) {
  const std::string_view t = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw DataError("line " + std::to_string(line_no) + ", field " +
                    std::to_string(field_no) + ": non-numeric token '" +
                    std::string(token) + "'");
  }
  return value;
}

std::vector<Index> seeded_permutation(Index n, std::uint64_t seed) {
  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  rng::Engine eng(rng::mix(seed));
  for (Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Index>(rng::uniform_index(eng, static_cast<std::uint64_t>(i) + 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return idx;
}

} // namespace

Dataset::Dataset(MatrixXd features, VectorXd targets, std::vector<std::string> feature_names,
                 std::vector<NormParams> norm_params)
    : features_(std::move(features)),
      targets_(std::move(targets)),
      feature_names_(std::move(feature_names)),
      norm_params_(std::move(norm_params)) {
  if (targets_.size() != features_.rows()) {
    throw std::invalid_argument("Dataset: targets length " + std::to_string(targets_.size()) +
                                " != feature rows " + std::to_string(features_.rows()));
  }
  if (!feature_names_.empty() &&
      static_cast<Index>(feature_names_.size()) != features_.cols()) {
    throw std::invalid_argument("Dataset: feature_names size mismatch");
  }
  if (!norm_params_.empty()) {
    if (static_cast<Index>(norm_params_.size()) != features_.cols()) {
      throw std::invalid_argument("Dataset: norm_params size mismatch");
    }
    for (const auto& p : norm_params_) {
      if (!(p.min < p.max)) {
        throw std::invalid_argument("Dataset: norm_params require min < max");
      }
    }
  }
}

Dataset load_bupa(const std::string& path, TargetMode mode) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);

  std::vector<std::array<double, kBupaFieldCount>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;

    std::array<double, kBupaFieldCount> fields{};
    std::stringstream ss(line);
    std::string token;
    int count = 0;
    while (std::getline(ss, token, ',')) {
      if (count < kBupaFieldCount) {
        fields[static_cast<std::size_t>(count)] = parse_field(token, line_no, count + 1);
      }
      ++count;
    }
    if (count != kBupaFieldCount) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(kBupaFieldCount) + " comma-separated fields, got " +
                      std::to_string(count));
    }
    if (mode == TargetMode::selector) {
      const double sel = fields[6];
      if (sel != 1.0 && sel != 2.0) {
        throw DataError("line " + std::to_string(line_no) +
                        ": selector value outside {1,2}: " + std::to_string(sel));
      }
    }
    rows.push_back(fields);
  }
  if (rows.empty()) throw DataError("no samples in data file: " + path);

  const Index n = static_cast<Index>(rows.size());
  const int n_features = mode == TargetMode::selector ? 6 : 5;
  const int target_field = mode == TargetMode::selector ? 6 : 5;

  MatrixXd features(n, n_features);
  VectorXd targets(n);
  for (Index i = 0; i < n; ++i) {
    const auto& f = rows[static_cast<std::size_t>(i)];
    for (int j = 0; j < n_features; ++j) features(i, j) = f[static_cast<std::size_t>(j)];
    const double raw = f[static_cast<std::size_t>(target_field)];
    targets[i] = mode == TargetMode::selector ? raw - 1.0 : raw;
  }

  std::vector<std::string> names(kBupaFieldNames.begin(),
                                 kBupaFieldNames.begin() + n_features);
  return Dataset(std::move(features), std::move(targets), std::move(names));
}

Dataset normalize_minmax(const Dataset& raw) {
  const MatrixXd& X = raw.features();
  MatrixXd scaled(X.rows(), X.cols());
  std::vector<NormParams> params(static_cast<std::size_t>(X.cols()));

  for (Index j = 0; j < X.cols(); ++j) {
    const double lo = X.col(j).minCoeff();
    const double hi = X.col(j).maxCoeff();
    if (!(lo < hi)) {
      const std::string name = raw.feature_names().empty()
                                   ? "column " + std::to_string(j)
                                   : raw.feature_names()[static_cast<std::size_t>(j)];
      throw DataError("constant feature column cannot be normalized: " + name);
    }
    scaled.col(j) = (X.col(j).array() - lo) / (hi - lo);
    params[static_cast<std::size_t>(j)] = {lo, hi};
  }
  return Dataset(std::move(scaled), raw.targets(), raw.feature_names(), std::move(params));
}

Dataset denormalize_minmax(const Dataset& normalized) {
  if (!normalized.normalized()) {
    throw std::invalid_argument("denormalize_minmax: dataset has no norm_params");
  }
  const MatrixXd& X = normalized.features();
  MatrixXd raw(X.rows(), X.cols());
  for (Index j = 0; j < X.cols(); ++j) {
    const auto& p = normalized.norm_params()[static_cast<std::size_t>(j)];
    raw.col(j) = X.col(j).array() * (p.max - p.min) + p.min;
  }
  return Dataset(std::move(raw), normalized.targets(), normalized.feature_names());
}

Dataset select_rows(const Dataset& d, const std::vector<Index>& indices) {
  MatrixXd features(static_cast<Index>(indices.size()), d.cols());
  VectorXd targets(static_cast<Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const Index src = indices[i];
    if (src < 0 || src >= d.rows()) {
      throw std::invalid_argument("select_rows: index out of range");
    }
    features.row(static_cast<Index>(i)) = d.features().row(src);
    targets[static_cast<Index>(i)] = d.targets()[src];
  }
  return Dataset(std::move(features), std::move(targets), d.feature_names(),
                 d.norm_params());
}

std::pair<Dataset, Dataset> split_holdout(const Dataset& d, const SplitSpec& spec) {
  if (d.rows() == 0) throw DataError("split_holdout: empty dataset");
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw ConfigError("split_holdout: train_fraction must be in (0,1), got " +
                      std::to_string(spec.train_fraction));
  }
  const Index n = d.rows();
  // Round half up in real arithmetic: the epsilon absorbs binary-representation
  // error in fraction*n (0.7*345 evaluates just below 241.5), which would
  // otherwise flip an exact .5 tie downward.
  const Index n_train = static_cast<Index>(
      std::floor(spec.train_fraction * static_cast<double>(n) + 0.5 + 1e-9));
  if (n_train == 0 || n_train == n) {
    throw ConfigError("split_holdout: fraction " + std::to_string(spec.train_fraction) +
                      " leaves an empty partition for n = " + std::to_string(n));
  }

  const std::vector<Index> perm = seeded_permutation(n, spec.seed);
  std::vector<Index> train_idx(perm.begin(), perm.begin() + n_train);
  std::vector<Index> test_idx(perm.begin() + n_train, perm.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  return {select_rows(d, train_idx), select_rows(d, test_idx)};
}

std::vector<std::pair<Dataset, Dataset>> kfold(const Dataset& d, const SplitSpec& spec) {
  const Index n = d.rows();
  if (spec.k < 2 || static_cast<Index>(spec.k) > n) {
    throw ConfigError("kfold: k must satisfy 2 <= k <= n, got k = " +
                      std::to_string(spec.k) + " with n = " + std::to_string(n));
  }
  const std::vector<Index> perm = seeded_permutation(n, spec.seed);

  // first n % k folds take one extra sample
  const Index k = spec.k;
  const Index base = n / k;
  const Index extra = n % k;

  std::vector<std::pair<Dataset, Dataset>> folds;
  folds.reserve(static_cast<std::size_t>(k));
  Index begin = 0;
  for (Index f = 0; f < k; ++f) {
    const Index size = base + (f < extra ? 1 : 0);
    std::vector<Index> test_idx(perm.begin() + begin, perm.begin() + begin + size);
    std::vector<Index> train_idx;
    train_idx.reserve(static_cast<std::size_t>(n - size));
    train_idx.insert(train_idx.end(), perm.begin(), perm.begin() + begin);
    train_idx.insert(train_idx.end(), perm.begin() + begin + size, perm.end());
    std::sort(test_idx.begin(), test_idx.end());
    std::sort(train_idx.begin(), train_idx.end());
    folds.emplace_back(select_rows(d, train_idx), select_rows(d, test_idx));
    begin += size;
  }
  return folds;
}

} // namespace nftk
