#include <doctest.h>

#include <limits>
#include <stdexcept>
#include <vector>

#include "nftk/errors.hpp"
#include "nftk/metrics.hpp"

using namespace nftk;

TEST_CASE("classify thresholds at one half with the >= convention") {
  CHECK(classify(0.5) == 1);
  CHECK(classify(0.49) == 0);
  CHECK(classify(1.7) == 1);    // extrapolated outputs need no clamping
  CHECK(classify(-0.3) == 0);
  CHECK(classify(0.2, 0.1) == 1);
  CHECK_THROWS_AS(classify(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(classify(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("classify_all maps a whole vector") {
  VectorXd v(4);
  v << 0.5, 0.49, 1.7, -2.0;
  CHECK(classify_all(v) == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("to_classes accepts exactly 0/1 targets") {
  VectorXd ok(3);
  ok << 0.0, 1.0, 1.0;
  CHECK(to_classes(ok) == std::vector<int>{0, 1, 1});
  VectorXd bad(2);
  bad << 0.0, 2.0;
  CHECK_THROWS_AS(to_classes(bad), DataError);
}

TEST_CASE("confusion counts against labels") {
  SUBCASE("perfect agreement") {
    const ConfusionMatrix cm = confusion({1, 0, 1}, {1, 0, 1});
    CHECK(cm.tp == 2);
    CHECK(cm.tn == 1);
    CHECK(cm.fp == 0);
    CHECK(cm.fn == 0);
  }
  SUBCASE("hand-counted mixed case") {
    const ConfusionMatrix cm = confusion({1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0});
    CHECK(cm.tp == 1);
    CHECK(cm.fp == 1);
    CHECK(cm.fn == 1);
    CHECK(cm.tn == 3);
    CHECK(cm.total() == 6);
  }
  SUBCASE("empty vectors give the all-zero matrix") {
    const ConfusionMatrix cm = confusion({}, {});
    CHECK(cm.total() == 0);
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(confusion({1}, {1, 0}), std::invalid_argument);
  }
}

TEST_CASE("summarize computes rates and leaves zero-denominator rates absent") {
  SUBCASE("hand-evaluated rates") {
    ConfusionMatrix cm;
    cm.tp = 2;
    cm.fn = 1;
    cm.tn = 3;
    cm.fp = 0;
    const MetricsSummary s = summarize(cm);
    CHECK(s.accuracy == doctest::Approx(5.0 / 6.0));
    REQUIRE(s.sensitivity.has_value());
    CHECK(*s.sensitivity == doctest::Approx(2.0 / 3.0));
    REQUIRE(s.specificity.has_value());
    CHECK(*s.specificity == doctest::Approx(1.0));
  }
  SUBCASE("all-correct matrix maxes every rate") {
    ConfusionMatrix cm;
    cm.tp = 4;
    cm.tn = 6;
    const MetricsSummary s = summarize(cm);
    CHECK(s.accuracy == doctest::Approx(1.0));
    CHECK(*s.sensitivity == doctest::Approx(1.0));
    CHECK(*s.specificity == doctest::Approx(1.0));
  }
  SUBCASE("no negatives leaves specificity undefined rather than 0 or 1") {
    ConfusionMatrix cm;
    cm.tp = 3;
    cm.fn = 1;
    const MetricsSummary s = summarize(cm);
    CHECK(s.sensitivity.has_value());
    CHECK_FALSE(s.specificity.has_value());
  }
  SUBCASE("no positives leaves sensitivity undefined") {
    ConfusionMatrix cm;
    cm.tn = 3;
    cm.fp = 1;
    const MetricsSummary s = summarize(cm);
    CHECK_FALSE(s.sensitivity.has_value());
    CHECK(s.specificity.has_value());
  }
  SUBCASE("empty matrix is rejected") {
    CHECK_THROWS_AS(summarize(ConfusionMatrix{}), std::invalid_argument);
  }
}

TEST_CASE("metrics_table prints counts and rates") {
  ConfusionMatrix cm;
  cm.tp = 2;
  cm.fn = 1;
  cm.tn = 3;
  const std::string table = metrics_table(cm, summarize(cm));
  CHECK(table.find("predicted 1") != std::string::npos);
  CHECK(table.find("actual 0") != std::string::npos);
  CHECK(table.find("accuracy") != std::string::npos);
  CHECK(table.find("sensitivity") != std::string::npos);
  CHECK(table.find("specificity") != std::string::npos);
}
