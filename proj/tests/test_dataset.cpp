#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "nftk/dataset.hpp"
#include "nftk/errors.hpp"

using namespace nftk;

namespace {

const std::string kDataFile = std::string(NFTK_DATA_DIR) + "/bupa-synthetic.data";

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("./") + name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

Dataset tiny(int n) {
  MatrixXd X(n, 2);
  VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = i;
    X(i, 1) = 2 * i;
    y(i) = i % 2;
  }
  return Dataset(X, y, {"a", "b"});
}

} // namespace

TEST_CASE("load_bupa parses the shipped file") {
  SUBCASE("selector mode: 345 samples, 6 features, binary targets") {
    const Dataset d = load_bupa(kDataFile, TargetMode::selector);
    CHECK(d.rows() == 345);
    CHECK(d.cols() == 6);
    CHECK(d.feature_names().size() == 6);
    for (Index i = 0; i < d.rows(); ++i) {
      const double t = d.targets()(i);
      CHECK((t == 0.0 || t == 1.0));
    }
  }
  SUBCASE("drinks mode: 5 features, targets from column 6") {
    const Dataset d = load_bupa(kDataFile, TargetMode::drinks);
    CHECK(d.rows() == 345);
    CHECK(d.cols() == 5);
    // Column 6 is the half-pint count; the file carries half-integer values.
    for (Index i = 0; i < d.rows(); ++i) {
      CHECK(d.targets()(i) >= 0.0);
      CHECK(d.targets()(i) <= 20.0);
    }
  }
  SUBCASE("selector and drinks targets line up with the raw text") {
    std::ifstream in(kDataFile);
    std::string line;
    std::getline(in, line);
    const Dataset sel = load_bupa(kDataFile, TargetMode::selector);
    const Dataset dri = load_bupa(kDataFile, TargetMode::drinks);
    // First shipped row ends in ",9.5,2": drinks 9.5, selector 2 -> 1.
    CHECK(line.substr(line.size() - 6) == std::string(",9.5,2"));
    CHECK(sel.targets()(0) == doctest::Approx(1.0));
    CHECK(dri.targets()(0) == doctest::Approx(9.5));
  }
}

TEST_CASE("load_bupa rejects malformed input") {
  SUBCASE("wrong field count names the offending line") {
    const std::string path =
        write_temp("six-fields.data", "85,92,45,27,31,0.0,1\n85,92,45,27,31,0.0\n");
    try {
      load_bupa(path, TargetMode::selector);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::remove(path.c_str());
  }
  SUBCASE("non-numeric field") {
    const std::string path = write_temp("bad-number.data", "85,92,xx,27,31,0.0,1\n");
    CHECK_THROWS_AS(load_bupa(path, TargetMode::selector), DataError);
    std::remove(path.c_str());
  }
  SUBCASE("selector outside {1, 2}") {
    const std::string path = write_temp("bad-selector.data", "85,92,45,27,31,0.0,3\n");
    CHECK_THROWS_AS(load_bupa(path, TargetMode::selector), DataError);
    std::remove(path.c_str());
  }
  SUBCASE("missing file error names the path") {
    try {
      load_bupa("./no-such-file.data", TargetMode::selector);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("no-such-file.data") != std::string::npos);
    }
  }
}

TEST_CASE("normalize_minmax maps columns onto the unit interval") {
  SUBCASE("endpoints and midpoint") {
    MatrixXd X(3, 1);
    X << 1.0, 3.0, 5.0;
    const Dataset d(X, VectorXd::Zero(3), {"x"});
    const Dataset n = normalize_minmax(d);
    CHECK(n.features()(0, 0) == doctest::Approx(0.0));
    CHECK(n.features()(1, 0) == doctest::Approx(0.5));
    CHECK(n.features()(2, 0) == doctest::Approx(1.0));
    CHECK(n.normalized());
    CHECK(n.norm_params()[0].min == doctest::Approx(1.0));
    CHECK(n.norm_params()[0].max == doctest::Approx(5.0));
  }
  SUBCASE("already-unit column is unchanged") {
    MatrixXd X(2, 1);
    X << 0.0, 1.0;
    const Dataset n = normalize_minmax(Dataset(X, VectorXd::Zero(2), {"x"}));
    CHECK(n.features()(0, 0) == doctest::Approx(0.0));
    CHECK(n.features()(1, 0) == doctest::Approx(1.0));
  }
  SUBCASE("constant column is rejected") {
    MatrixXd X(3, 1);
    X << 2.0, 2.0, 2.0;
    CHECK_THROWS_AS(normalize_minmax(Dataset(X, VectorXd::Zero(3), {"x"})), DataError);
  }
  SUBCASE("denormalize restores the original values") {
    const Dataset d = load_bupa(kDataFile, TargetMode::selector);
    const Dataset n = normalize_minmax(d);
    const Dataset back = denormalize_minmax(n);
    CHECK((back.features() - d.features()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("split_holdout sizes and determinism") {
  const Dataset d = load_bupa(kDataFile, TargetMode::selector);

  SUBCASE("345 rows at 0.7 split 242/103 by round-half-up") {
    SplitSpec spec;
    spec.train_fraction = 0.7;
    spec.seed = 42;
    const auto [train, test] = split_holdout(d, spec);
    CHECK(train.rows() == 242);
    CHECK(test.rows() == 103);
    CHECK(train.cols() == 6);
  }
  SUBCASE("identical specs give identical splits") {
    SplitSpec spec;
    spec.seed = 7;
    const auto [a_train, a_test] = split_holdout(d, spec);
    const auto [b_train, b_test] = split_holdout(d, spec);
    CHECK((a_train.features() - b_train.features()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a_test.features() - b_test.features()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a_train.targets() - b_train.targets()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("different seeds move rows between the partitions") {
    SplitSpec a, b;
    a.seed = 1;
    b.seed = 2;
    const auto [a_train, a_test] = split_holdout(d, a);
    const auto [b_train, b_test] = split_holdout(d, b);
    CHECK((a_train.features() - b_train.features()).cwiseAbs().maxCoeff() > 0.0);
  }
  SUBCASE("degenerate fractions are rejected") {
    SplitSpec spec;
    spec.train_fraction = 1.0;
    CHECK_THROWS_AS(split_holdout(d, spec), ConfigError);
    spec.train_fraction = 0.0;
    CHECK_THROWS_AS(split_holdout(d, spec), ConfigError);
  }
}

TEST_CASE("kfold partitions evenly") {
  SUBCASE("345 rows, five folds of 69") {
    const Dataset d = load_bupa(kDataFile, TargetMode::selector);
    SplitSpec spec;
    spec.mode = SplitSpec::Mode::kfold;
    spec.k = 5;
    spec.seed = 3;
    const auto folds = kfold(d, spec);
    REQUIRE(folds.size() == 5);
    for (const auto& [train, test] : folds) {
      CHECK(test.rows() == 69);
      CHECK(train.rows() == 276);
    }
  }
  SUBCASE("ten rows over three folds give sizes {4, 3, 3}") {
    SplitSpec spec;
    spec.mode = SplitSpec::Mode::kfold;
    spec.k = 3;
    const auto folds = kfold(tiny(10), spec);
    REQUIRE(folds.size() == 3);
    std::multiset<Index> sizes;
    for (const auto& [train, test] : folds) sizes.insert(test.rows());
    CHECK(sizes == std::multiset<Index>{3, 3, 4});
  }
  SUBCASE("k below two is rejected") {
    SplitSpec spec;
    spec.mode = SplitSpec::Mode::kfold;
    spec.k = 1;
    CHECK_THROWS_AS(kfold(tiny(10), spec), ConfigError);
  }
}

TEST_CASE("select_rows keeps the requested order") {
  const Dataset d = tiny(5);
  const Dataset s = select_rows(d, {4, 0, 2});
  REQUIRE(s.rows() == 3);
  CHECK(s.features()(0, 0) == doctest::Approx(4.0));
  CHECK(s.features()(1, 0) == doctest::Approx(0.0));
  CHECK(s.features()(2, 0) == doctest::Approx(2.0));
  CHECK(s.targets()(0) == doctest::Approx(0.0));
}
