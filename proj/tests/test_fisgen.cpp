#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "nftk/codec.hpp"
#include "nftk/errors.hpp"
#include "nftk/fisgen.hpp"
#include "nftk/fuzzy.hpp"

using namespace nftk;

namespace {

Dataset from_rows(const std::vector<std::vector<double>>& rows, std::vector<double> targets = {}) {
  const Index n = static_cast<Index>(rows.size());
  const Index m = static_cast<Index>(rows.front().size());
  MatrixXd X(n, m);
  VectorXd y = VectorXd::Zero(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) X(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (!targets.empty()) y(i) = targets[static_cast<std::size_t>(i)];
  }
  return Dataset(X, y, {});
}

// Two tight ten-point blobs, far apart relative to the 0.5 radius.
Dataset two_blobs() {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> jitter(-0.02, 0.02);
  std::vector<std::vector<double>> rows;
  std::vector<double> targets;
  for (int i = 0; i < 10; ++i) {
    rows.push_back({0.2 + jitter(eng), 0.2 + jitter(eng)});
    targets.push_back(0.0);
  }
  for (int i = 0; i < 10; ++i) {
    rows.push_back({0.8 + jitter(eng), 0.8 + jitter(eng)});
    targets.push_back(1.0);
  }
  return from_rows(rows, targets);
}

// Chiu density potential computed independently of the library routine.
VectorXd brute_force_potentials(const Dataset& d, double radius) {
  const MatrixXd& X = d.features();
  VectorXd p = VectorXd::Zero(X.rows());
  for (Index i = 0; i < X.rows(); ++i) {
    for (Index j = 0; j < X.rows(); ++j) {
      p(i) += std::exp(-4.0 / (radius * radius) * (X.row(i) - X.row(j)).squaredNorm());
    }
  }
  return p;
}

} // namespace

TEST_CASE("grid partition lays out bells and the rule product") {
  std::vector<std::vector<double>> rows = {{0.0, 0.0}, {1.0, 1.0}, {0.5, 0.5}};
  const Dataset d = from_rows(rows);

  SUBCASE("two inputs, two MFs each: four rules covering the Cartesian product") {
    GenConfig cfg;
    cfg.method = GenConfig::Method::grid;
    cfg.mfs_per_input = 2;
    const Fis fis = grid_partition(d, cfg);
    REQUIRE(fis.n_rules() == 4);
    CHECK(fis.rules[0] == std::vector<int>{0, 0});
    CHECK(fis.rules[1] == std::vector<int>{0, 1});
    CHECK(fis.rules[2] == std::vector<int>{1, 0});
    CHECK(fis.rules[3] == std::vector<int>{1, 1});
    for (const auto& rc : fis.consequents) {
      CHECK(rc.coefficients.cwiseAbs().maxCoeff() == 0.0);
      CHECK(rc.constant == 0.0);
    }
  }
  SUBCASE("two MFs on the unit range sit at the endpoints with half-width 0.5") {
    GenConfig cfg;
    cfg.method = GenConfig::Method::grid;
    cfg.mfs_per_input = 2;
    const Fis fis = grid_partition(d, cfg);
    REQUIRE(fis.input_mfs[0].size() == 2);
    CHECK(fis.input_mfs[0][0].center == doctest::Approx(0.0));
    CHECK(fis.input_mfs[0][1].center == doctest::Approx(1.0));
    CHECK(fis.input_mfs[0][0].width == doctest::Approx(0.5));
    CHECK(fis.input_mfs[0][0].shape == doctest::Approx(2.0));
    CHECK(fis.input_mfs[0][0].kind == MfKind::gbell);
  }
  SUBCASE("six inputs at three MFs each overflow the rule cap") {
    std::vector<std::vector<double>> wide = {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
    GenConfig cfg;
    cfg.method = GenConfig::Method::grid;
    cfg.mfs_per_input = 3;  // 3^6 = 729 > 256
    CHECK_THROWS_AS(grid_partition(from_rows(wide), cfg), ConfigError);
  }
  SUBCASE("fewer than two MFs per input is rejected") {
    GenConfig cfg;
    cfg.method = GenConfig::Method::grid;
    cfg.mfs_per_input = 1;
    CHECK_THROWS_AS(grid_partition(d, cfg), ConfigError);
  }
}

TEST_CASE("subtractive clustering selects density peaks") {
  GenConfig cfg;  // clustering defaults: radius 0.5, accept 0.5, reject 0.15

  SUBCASE("all points identical collapse to one center") {
    const Dataset d = from_rows({{0.4, 0.6}, {0.4, 0.6}, {0.4, 0.6}, {0.4, 0.6}});
    const auto centers = subtractive_clustering(d, cfg);
    REQUIRE(centers.size() == 1);
    CHECK(centers[0](0) == doctest::Approx(0.4));
    CHECK(centers[0](1) == doctest::Approx(0.6));
  }
  SUBCASE("a single sample is its own center") {
    const Dataset d = from_rows({{0.3, 0.7}});
    const auto centers = subtractive_clustering(d, cfg);
    REQUIRE(centers.size() == 1);
    CHECK(centers[0](0) == doctest::Approx(0.3));
  }
  SUBCASE("two separated blobs give one center inside each hull") {
    const Dataset d = two_blobs();
    const auto centers = subtractive_clustering(d, cfg);
    REQUIRE(centers.size() == 2);
    // One center near (0.2, 0.2), the other near (0.8, 0.8); hulls are
    // +-0.02 boxes around the blob anchors.
    const bool first_low = centers[0](0) < 0.5;
    const VectorXd& low = first_low ? centers[0] : centers[1];
    const VectorXd& high = first_low ? centers[1] : centers[0];
    for (int j = 0; j < 2; ++j) {
      CHECK(low(j) >= 0.18);
      CHECK(low(j) <= 0.22);
      CHECK(high(j) >= 0.78);
      CHECK(high(j) <= 0.82);
    }
  }
  SUBCASE("first center maximizes the independently computed potential") {
    const Dataset d = two_blobs();
    const VectorXd potential = brute_force_potentials(d, cfg.radius);
    Index best = 0;
    for (Index i = 1; i < potential.size(); ++i) {
      if (potential(i) > potential(best)) best = i;
    }
    const auto centers = subtractive_clustering(d, cfg);
    REQUIRE(!centers.empty());
    CHECK((centers[0] - d.features().row(best).transpose()).norm() == doctest::Approx(0.0));
  }
  SUBCASE("every center is one of the data points") {
    const Dataset d = two_blobs();
    for (const auto& c : subtractive_clustering(d, cfg)) {
      double dmin = 1e9;
      for (Index i = 0; i < d.rows(); ++i) {
        dmin = std::min(dmin, (c - d.features().row(i).transpose()).norm());
      }
      CHECK(dmin == doctest::Approx(0.0));
    }
  }
  SUBCASE("config validation") {
    GenConfig bad = cfg;
    bad.radius = 0.0;
    CHECK_THROWS_AS(subtractive_clustering(two_blobs(), bad), ConfigError);
    bad = cfg;
    bad.reject_ratio = bad.accept_ratio;
    CHECK_THROWS_AS(subtractive_clustering(two_blobs(), bad), ConfigError);
  }
}

TEST_CASE("fis_from_clusters builds one gaussian rule per center") {
  GenConfig cfg;

  SUBCASE("single center predicts a constant before training") {
    const Dataset d = from_rows({{0.1, 0.1}, {0.5, 0.5}, {0.9, 0.9}}, {1.0, 2.0, 3.0});
    const Fis fis = fis_from_clusters(d, {Eigen::Vector2d(0.5, 0.5)}, cfg);
    REQUIRE(fis.n_rules() == 1);
    const double at_left = fis_predict(fis, Eigen::Vector2d(0.0, 0.0));
    const double at_right = fis_predict(fis, Eigen::Vector2d(1.0, 1.0));
    CHECK(at_left == doctest::Approx(2.0));   // mean target of the one cluster
    CHECK(at_right == doctest::Approx(2.0));
  }
  SUBCASE("blob centers carry over into the MF centers with sigma = radius / sqrt(8)") {
    const Dataset d = two_blobs();
    const auto centers = subtractive_clustering(d, cfg);
    REQUIRE(centers.size() == 2);
    const Fis fis = fis_from_clusters(d, centers, cfg);
    REQUIRE(fis.n_rules() == 2);
    const double sigma = cfg.radius / std::sqrt(8.0);
    for (int i = 0; i < fis.n_inputs; ++i) {
      for (int c = 0; c < 2; ++c) {
        CHECK(fis.input_mfs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].kind ==
              MfKind::gaussian);
        CHECK(fis.input_mfs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].width ==
              doctest::Approx(sigma));
        CHECK(fis.input_mfs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].center ==
              doctest::Approx(centers[static_cast<std::size_t>(c)](i)));
      }
    }
    // Rule constants seed from per-cluster target means: 0 and 1 for the blobs.
    const double lo = std::min(fis.consequents[0].constant, fis.consequents[1].constant);
    const double hi = std::max(fis.consequents[0].constant, fis.consequents[1].constant);
    CHECK(lo == doctest::Approx(0.0));
    CHECK(hi == doctest::Approx(1.0));
  }
  SUBCASE("parameter count follows the counting identity") {
    const Dataset d = two_blobs();
    const auto centers = subtractive_clustering(d, cfg);
    const Fis fis = fis_from_clusters(d, centers, cfg);
    const int k = fis.n_rules();
    const int n = fis.n_inputs;
    CHECK(encode_fis(fis).layout.total() == n * k * 2 + k * (n + 1));
  }
  SUBCASE("dispatch builds the clustered form by default") {
    const Dataset d = two_blobs();
    const Fis fis = build_initial_fis(d, cfg);
    CHECK(fis.n_rules() == 2);
  }
}
