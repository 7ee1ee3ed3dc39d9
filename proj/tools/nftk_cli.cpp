// Experiment harness. Subcommands: train-anfis, train-anfis-pso, surface,
// compare. Config is a flat JSON key set (docs/formats.md); flags override
// file keys. Artifacts land under <out>/<digest>-s<seed>/ so reruns with the
// same config overwrite their own files and nothing else.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nftk/anfis.hpp"
#include "nftk/dataset.hpp"
#include "nftk/errors.hpp"
#include "nftk/fis_io.hpp"
#include "nftk/fisgen.hpp"
#include "nftk/metrics.hpp"
#include "nftk/pipeline.hpp"
#include "nftk/pso.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

// ---------------------------------------------------------------------------
// small helpers

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << v;
  return out.str();
}

/// Shortest round-trip decimal form, identical on every run.
std::string num(double v) { return ordered_json(v).dump(); }

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nftk::DataError("cannot write " + path.string());
  out << body;
  if (!out) throw nftk::DataError("write failed: " + path.string());
}

void write_json(const fs::path& path, const ordered_json& j) {
  write_text(path, j.dump(2) + "\n");
}

struct Stats {
  double mean = 0.0;
  double std_dev = 0.0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

// ---------------------------------------------------------------------------
// run configuration

struct RunConfig {
  std::string data;
  std::string out = "runs";
  nftk::TargetMode target = nftk::TargetMode::selector;
  double train_fraction = 0.7;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  nftk::GenConfig gen;
  nftk::TrainConfig anfis;
  nftk::PsoConfig pso;
};

nftk::TargetMode parse_target(const std::string& s) {
  if (s == "selector") return nftk::TargetMode::selector;
  if (s == "drinks") return nftk::TargetMode::drinks;
  throw nftk::ConfigError("target must be \"selector\" or \"drinks\", got \"" + s + "\"");
}

nftk::GenConfig::Method parse_gen_method(const std::string& s) {
  if (s == "clustering") return nftk::GenConfig::Method::clustering;
  if (s == "grid") return nftk::GenConfig::Method::grid;
  throw nftk::ConfigError("gen_method must be \"clustering\" or \"grid\", got \"" + s + "\"");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& csv) {
  std::vector<std::uint64_t> seeds;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string_view item(csv.data() + pos, comma - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw nftk::ConfigError("bad seed list entry \"" + std::string(item) + "\"");
    }
    seeds.push_back(value);
    pos = comma + 1;
  }
  return seeds;
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw nftk::ConfigError("config key \"" + key + "\" has the wrong type");
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nftk::ConfigError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw nftk::ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw nftk::ConfigError("config file must hold a JSON object");

  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key == "data") cfg.data = get_as<std::string>(j, key);
    else if (key == "out") cfg.out = get_as<std::string>(j, key);
    else if (key == "target") cfg.target = parse_target(get_as<std::string>(j, key));
    else if (key == "train_fraction") cfg.train_fraction = get_as<double>(j, key);
    else if (key == "seeds") cfg.seeds = get_as<std::vector<std::uint64_t>>(j, key);
    else if (key == "gen_method") cfg.gen.method = parse_gen_method(get_as<std::string>(j, key));
    else if (key == "mfs_per_input") cfg.gen.mfs_per_input = get_as<int>(j, key);
    else if (key == "rule_cap") cfg.gen.rule_cap = get_as<int>(j, key);
    else if (key == "radius") cfg.gen.radius = get_as<double>(j, key);
    else if (key == "accept_ratio") cfg.gen.accept_ratio = get_as<double>(j, key);
    else if (key == "reject_ratio") cfg.gen.reject_ratio = get_as<double>(j, key);
    else if (key == "epochs") cfg.anfis.epochs = get_as<int>(j, key);
    else if (key == "learning_rate") cfg.anfis.learning_rate = get_as<double>(j, key);
    else if (key == "ridge_lambda") cfg.anfis.ridge_lambda = get_as<double>(j, key);
    else if (key == "swarm_size") cfg.pso.swarm_size = get_as<int>(j, key);
    else if (key == "iterations") cfg.pso.iterations = get_as<int>(j, key);
    else if (key == "w_start") cfg.pso.w_start = get_as<double>(j, key);
    else if (key == "w_end") cfg.pso.w_end = get_as<double>(j, key);
    else if (key == "c1") cfg.pso.c1 = get_as<double>(j, key);
    else if (key == "c2") cfg.pso.c2 = get_as<double>(j, key);
    else if (key == "v_max_fraction") cfg.pso.v_max_fraction = get_as<double>(j, key);
    else throw nftk::ConfigError("unknown config key \"" + key + "\"");
  }
}

ordered_json effective_config(const RunConfig& cfg) {
  ordered_json j;
  j["data"] = cfg.data;
  j["target"] = cfg.target == nftk::TargetMode::selector ? "selector" : "drinks";
  j["train_fraction"] = cfg.train_fraction;
  j["gen_method"] =
      cfg.gen.method == nftk::GenConfig::Method::clustering ? "clustering" : "grid";
  j["mfs_per_input"] = cfg.gen.mfs_per_input;
  j["rule_cap"] = cfg.gen.rule_cap;
  j["radius"] = cfg.gen.radius;
  j["accept_ratio"] = cfg.gen.accept_ratio;
  j["reject_ratio"] = cfg.gen.reject_ratio;
  j["epochs"] = cfg.anfis.epochs;
  j["learning_rate"] = cfg.anfis.learning_rate;
  j["ridge_lambda"] = cfg.anfis.ridge_lambda;
  j["swarm_size"] = cfg.pso.swarm_size;
  j["iterations"] = cfg.pso.iterations;
  j["w_start"] = cfg.pso.w_start;
  j["w_end"] = cfg.pso.w_end;
  j["c1"] = cfg.pso.c1;
  j["c2"] = cfg.pso.c2;
  j["v_max_fraction"] = cfg.pso.v_max_fraction;
  j["out"] = cfg.out;
  j["seeds"] = cfg.seeds;
  return j;
}

/// Digest over the experiment identity: everything except output location
/// and the seed list, which vary per run without changing the experiment.
std::string config_digest(const RunConfig& cfg) {
  ordered_json j = effective_config(cfg);
  j.erase("out");
  j.erase("seeds");
  return hex64(fnv1a(j.dump()));
}

void validate_run_config(const RunConfig& cfg) {
  if (cfg.data.empty()) throw nftk::ConfigError("no data file given (--data or config key \"data\")");
  if (cfg.seeds.empty()) throw nftk::ConfigError("seed list is empty");
  if (!(cfg.train_fraction > 0.0) || !(cfg.train_fraction < 1.0)) {
    throw nftk::ConfigError("train_fraction must lie in (0, 1)");
  }
  cfg.gen.validate();
  cfg.anfis.validate();
  cfg.pso.validate();
}

// ---------------------------------------------------------------------------
// shared train-command plumbing

ordered_json method_result_json(const nftk::MethodResult& mr) {
  ordered_json j;
  j["train_rmse"] = mr.train_rmse;
  j["test_rmse"] = mr.test_rmse;
  j["train_mse"] = mr.train_mse;
  j["test_mse"] = mr.test_mse;
  if (mr.test_confusion) {
    j["test_confusion"] = {{"tp", mr.test_confusion->tp},
                           {"fp", mr.test_confusion->fp},
                           {"tn", mr.test_confusion->tn},
                           {"fn", mr.test_confusion->fn}};
    const auto& m = *mr.test_metrics;
    j["test_metrics"]["accuracy"] = m.accuracy;
    j["test_metrics"]["sensitivity"] =
        m.sensitivity ? ordered_json(*m.sensitivity) : ordered_json(nullptr);
    j["test_metrics"]["specificity"] =
        m.specificity ? ordered_json(*m.specificity) : ordered_json(nullptr);
  } else {
    j["test_confusion"] = nullptr;
    j["test_metrics"] = nullptr;
  }
  return j;
}

std::string history_csv(const nftk::TrainHistory& h) {
  std::ostringstream out;
  const bool with_test = !h.test_rmse.empty();
  out << (with_test ? "epoch,train_rmse,test_rmse\n" : "epoch,train_rmse\n");
  for (std::size_t e = 0; e < h.train_rmse.size(); ++e) {
    out << (e + 1) << ',' << num(h.train_rmse[e]);
    if (with_test) out << ',' << num(h.test_rmse[e]);
    out << '\n';
  }
  return out.str();
}

std::string convergence_csv(const std::vector<double>& gbest) {
  std::ostringstream out;
  out << "iteration,gbest_value\n";
  for (std::size_t i = 0; i < gbest.size(); ++i) {
    out << i << ',' << num(gbest[i]) << '\n';
  }
  return out.str();
}

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::string dir;
  double train_rmse = 0.0;
  double test_rmse = 0.0;
  double train_mse = 0.0;
  double test_mse = 0.0;
  std::optional<double> accuracy;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
};

SeedOutcome write_seed_artifacts(const std::string& method, const RunConfig& cfg,
                                 const std::string& digest, std::uint64_t seed,
                                 const nftk::MethodResult& mr, nftk::Index n_train,
                                 nftk::Index n_test) {
  const fs::path dir = fs::path(cfg.out) / (digest + "-s" + std::to_string(seed));
  fs::create_directories(dir);

  nftk::save_fis(mr.model, (dir / "model.json").string());
  const bool has_history = !mr.history.train_rmse.empty();
  const bool has_convergence = !mr.convergence.empty();
  if (has_history) write_text(dir / "history.csv", history_csv(mr.history));
  if (has_convergence) write_text(dir / "convergence.csv", convergence_csv(mr.convergence));

  ordered_json report;
  report["format"] = "nftk-report";
  report["version"] = 1;
  report["method"] = method;
  report["config_digest"] = digest;
  report["seed"] = seed;
  report["target"] = cfg.target == nftk::TargetMode::selector ? "selector" : "drinks";
  report["n_train"] = n_train;
  report["n_test"] = n_test;
  report.update(method_result_json(mr));
  report["files"]["model"] = "model.json";
  report["files"]["history"] = has_history ? ordered_json("history.csv") : ordered_json(nullptr);
  report["files"]["convergence"] =
      has_convergence ? ordered_json("convergence.csv") : ordered_json(nullptr);
  write_json(dir / "report.json", report);

  SeedOutcome row;
  row.seed = seed;
  row.dir = dir.filename().string();
  row.train_rmse = mr.train_rmse;
  row.test_rmse = mr.test_rmse;
  row.train_mse = mr.train_mse;
  row.test_mse = mr.test_mse;
  if (mr.test_metrics) {
    row.accuracy = mr.test_metrics->accuracy;
    row.sensitivity = mr.test_metrics->sensitivity;
    row.specificity = mr.test_metrics->specificity;
  }
  return row;
}

ordered_json runs_report(const std::string& method, const RunConfig& cfg,
                         const std::string& digest, const std::vector<SeedOutcome>& rows) {
  ordered_json j;
  j["format"] = "nftk-runs";
  j["version"] = 1;
  j["method"] = method;
  j["config_digest"] = digest;
  j["target"] = cfg.target == nftk::TargetMode::selector ? "selector" : "drinks";
  j["config"] = effective_config(cfg);

  ordered_json runs = ordered_json::array();
  std::vector<double> train_rmse, test_rmse, accuracy;
  for (const auto& row : rows) {
    ordered_json r;
    r["seed"] = row.seed;
    r["dir"] = row.dir;
    r["train_rmse"] = row.train_rmse;
    r["test_rmse"] = row.test_rmse;
    r["train_mse"] = row.train_mse;
    r["test_mse"] = row.test_mse;
    r["accuracy"] = row.accuracy ? ordered_json(*row.accuracy) : ordered_json(nullptr);
    r["sensitivity"] = row.sensitivity ? ordered_json(*row.sensitivity) : ordered_json(nullptr);
    r["specificity"] = row.specificity ? ordered_json(*row.specificity) : ordered_json(nullptr);
    runs.push_back(std::move(r));
    train_rmse.push_back(row.train_rmse);
    test_rmse.push_back(row.test_rmse);
    if (row.accuracy) accuracy.push_back(*row.accuracy);
  }
  j["runs"] = std::move(runs);

  auto stat_json = [](const std::vector<double>& xs) {
    const Stats s = stats_of(xs);
    return ordered_json{{"mean", s.mean}, {"std", s.std_dev}};
  };
  j["summary"]["train_rmse"] = stat_json(train_rmse);
  j["summary"]["test_rmse"] = stat_json(test_rmse);
  j["summary"]["accuracy"] =
      accuracy.empty() ? ordered_json(nullptr) : stat_json(accuracy);
  return j;
}

void print_outcome_table(const std::string& method, const std::vector<SeedOutcome>& rows) {
  auto cell = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << *v;
    return s.str();
  };
  std::cout << method << " results\n";
  std::cout << std::left << std::setw(8) << "seed" << std::setw(12) << "train_rmse"
            << std::setw(12) << "test_rmse" << std::setw(12) << "accuracy" << "\n";
  std::vector<double> train_rmse, test_rmse, accuracy;
  for (const auto& row : rows) {
    std::cout << std::left << std::setw(8) << row.seed << std::setw(12)
              << cell(row.train_rmse) << std::setw(12) << cell(row.test_rmse)
              << std::setw(12) << cell(row.accuracy) << "\n";
    train_rmse.push_back(row.train_rmse);
    test_rmse.push_back(row.test_rmse);
    if (row.accuracy) accuracy.push_back(*row.accuracy);
  }
  const Stats tr = stats_of(train_rmse);
  const Stats te = stats_of(test_rmse);
  std::cout << std::left << std::setw(8) << "mean" << std::setw(12) << cell(tr.mean)
            << std::setw(12) << cell(te.mean) << std::setw(12)
            << cell(accuracy.empty() ? std::optional<double>{}
                                     : std::optional<double>{stats_of(accuracy).mean})
            << "\n";
  std::cout << std::left << std::setw(8) << "std" << std::setw(12) << cell(tr.std_dev)
            << std::setw(12) << cell(te.std_dev) << std::setw(12)
            << cell(accuracy.empty() ? std::optional<double>{}
                                     : std::optional<double>{stats_of(accuracy).std_dev})
            << "\n";
}

int cmd_train(const RunConfig& cfg, bool with_pso) {
  validate_run_config(cfg);
  const std::string method = with_pso ? "anfis-pso" : "anfis";
  const std::string digest = config_digest(cfg);

  const nftk::Dataset raw = nftk::load_bupa(cfg.data, cfg.target);
  const nftk::Dataset data = nftk::normalize_minmax(raw);

  std::vector<SeedOutcome> rows;
  for (const std::uint64_t seed : cfg.seeds) {
    nftk::SplitSpec spec;
    spec.mode = nftk::SplitSpec::Mode::holdout;
    spec.train_fraction = cfg.train_fraction;
    spec.seed = seed;
    const auto [train, test] = nftk::split_holdout(data, spec);

    nftk::MethodResult mr;
    if (with_pso) {
      nftk::PsoConfig pso_cfg = cfg.pso;
      pso_cfg.seed = seed;
      nftk::ExperimentReport report =
          nftk::run_anfis_pso(train, test, cfg.gen, pso_cfg, cfg.anfis, cfg.target);
      mr = std::move(report.anfis_pso);
    } else {
      mr = nftk::run_anfis_baseline(train, test, cfg.gen, cfg.anfis, cfg.target);
    }
    rows.push_back(
        write_seed_artifacts(method, cfg, digest, seed, mr, train.rows(), test.rows()));
  }

  fs::create_directories(cfg.out);
  const fs::path runs_path = fs::path(cfg.out) / (method + "-" + digest + ".json");
  write_json(runs_path, runs_report(method, cfg, digest, rows));

  print_outcome_table(method, rows);
  std::cout << "wrote " << runs_path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// surface

int cmd_surface(const std::string& model_path, int xi, int xj, int resolution,
                double fixed, const std::string& out_path) {
  if (resolution < 2) throw nftk::ConfigError("resolution must be >= 2");
  if (!std::isfinite(fixed)) throw nftk::ConfigError("fixed value must be finite");
  const nftk::Fis fis = nftk::load_fis(model_path);
  if (xi == xj) throw nftk::ConfigError("the two surface inputs must differ");
  if (xi < 0 || xi >= fis.n_inputs || xj < 0 || xj >= fis.n_inputs) {
    throw nftk::ConfigError("surface inputs must lie in [0, " +
                            std::to_string(fis.n_inputs - 1) + "]");
  }

  std::ostringstream csv;
  csv << "x" << xi << ",x" << xj << ",y\n";
  nftk::VectorXd x = nftk::VectorXd::Constant(fis.n_inputs, fixed);
  for (int a = 0; a < resolution; ++a) {
    for (int b = 0; b < resolution; ++b) {
      x[xi] = static_cast<double>(a) / (resolution - 1);
      x[xj] = static_cast<double>(b) / (resolution - 1);
      csv << num(x[xi]) << ',' << num(x[xj]) << ',' << num(nftk::fis_predict(fis, x))
          << '\n';
    }
  }
  write_text(out_path, csv.str());
  std::cout << "wrote " << out_path << " (" << resolution * resolution << " points)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct LoadedRuns {
  std::string method;
  std::string target;
  ordered_json runs;
};

LoadedRuns load_runs_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nftk::DataError("cannot open report: " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const json::parse_error& e) {
    throw nftk::DataError("report " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "nftk-runs") {
    throw nftk::DataError("report " + path + " is not an nftk-runs document");
  }
  LoadedRuns r;
  try {
    r.method = j.at("method").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.runs = j.at("runs");
    for (const auto& run : r.runs) {
      (void)run.at("seed").get<std::uint64_t>();
      (void)run.at("train_rmse").get<double>();
      (void)run.at("test_rmse").get<double>();
    }
  } catch (const json::exception& e) {
    throw nftk::DataError("report " + path + " has an unexpected schema: " + e.what());
  }
  return r;
}

int cmd_compare(const std::vector<std::string>& paths) {
  std::vector<LoadedRuns> reports;
  for (const auto& p : paths) reports.push_back(load_runs_report(p));
  for (const auto& r : reports) {
    if (r.target != reports.front().target) {
      throw nftk::DataError("reports mix target modes (" + reports.front().target +
                            " vs " + r.target + ")");
    }
  }

  auto cell = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << *v;
    return s.str();
  };
  auto opt_field = [](const ordered_json& run, const char* key) -> std::optional<double> {
    if (!run.contains(key) || run.at(key).is_null()) return std::nullopt;
    return run.at(key).get<double>();
  };

  std::cout << std::left << std::setw(12) << "method" << std::setw(8) << "seed"
            << std::setw(12) << "train_rmse" << std::setw(12) << "test_rmse"
            << std::setw(12) << "accuracy" << std::setw(13) << "sensitivity"
            << std::setw(13) << "specificity" << "\n";

  std::vector<Stats> test_rmse_stats;
  std::vector<std::optional<Stats>> accuracy_stats;
  for (const auto& r : reports) {
    std::vector<double> train_rmse, test_rmse, accuracy;
    for (const auto& run : r.runs) {
      const auto acc = opt_field(run, "accuracy");
      std::cout << std::left << std::setw(12) << r.method << std::setw(8)
                << run.at("seed").get<std::uint64_t>() << std::setw(12)
                << cell(run.at("train_rmse").get<double>()) << std::setw(12)
                << cell(run.at("test_rmse").get<double>()) << std::setw(12) << cell(acc)
                << std::setw(13) << cell(opt_field(run, "sensitivity")) << std::setw(13)
                << cell(opt_field(run, "specificity")) << "\n";
      train_rmse.push_back(run.at("train_rmse").get<double>());
      test_rmse.push_back(run.at("test_rmse").get<double>());
      if (acc) accuracy.push_back(*acc);
    }
    const Stats tr = stats_of(train_rmse);
    const Stats te = stats_of(test_rmse);
    std::cout << std::left << std::setw(12) << r.method << std::setw(8) << "mean"
              << std::setw(12) << cell(tr.mean) << std::setw(12) << cell(te.mean)
              << std::setw(12)
              << cell(accuracy.empty() ? std::optional<double>{}
                                       : std::optional<double>{stats_of(accuracy).mean})
              << "\n";
    std::cout << std::left << std::setw(12) << r.method << std::setw(8) << "std"
              << std::setw(12) << cell(tr.std_dev) << std::setw(12) << cell(te.std_dev)
              << std::setw(12)
              << cell(accuracy.empty() ? std::optional<double>{}
                                       : std::optional<double>{stats_of(accuracy).std_dev})
              << "\n";
    test_rmse_stats.push_back(te);
    accuracy_stats.push_back(accuracy.empty() ? std::optional<Stats>{}
                                              : std::optional<Stats>{stats_of(accuracy)});
  }

  for (std::size_t i = 1; i < reports.size(); ++i) {
    const std::string pair =
        "(" + reports[i].method + " - " + reports.front().method + ")";
    std::cout << "mean test RMSE delta " << pair << ": "
              << num(test_rmse_stats[i].mean - test_rmse_stats.front().mean) << "\n";
    if (accuracy_stats[i] && accuracy_stats.front()) {
      std::cout << "mean accuracy delta " << pair << ": "
                << num(accuracy_stats[i]->mean - accuracy_stats.front()->mean) << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Takagi-Sugeno neuro-fuzzy toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, data_flag, out_flag, target_flag, seeds_flag;
  std::uint64_t seed_flag = 0;
  double radius_flag = 0.0;
  int epochs_flag = 0, iterations_flag = 0, swarm_flag = 0;

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flat keys)");
    cmd->add_option("--data", data_flag, "BUPA-format data file");
    cmd->add_option("--target", target_flag, "target mode: selector or drinks");
    cmd->add_option("--seed", seed_flag, "single split/PSO seed");
    cmd->add_option("--seeds", seeds_flag, "comma-separated seed list");
    cmd->add_option("--out", out_flag, "output directory");
    cmd->add_option("--radius", radius_flag, "clustering radius (normalized units)");
    cmd->add_option("--epochs", epochs_flag, "hybrid-learning epochs");
    cmd->add_option("--iterations", iterations_flag, "PSO iterations");
    cmd->add_option("--swarm", swarm_flag, "PSO swarm size");
  };

  CLI::App* train_anfis = app.add_subcommand(
      "train-anfis", "Hybrid-learning baseline across the seed list");
  add_run_flags(train_anfis);
  CLI::App* train_pso = app.add_subcommand(
      "train-anfis-pso", "PSO-tuned system across the seed list");
  add_run_flags(train_pso);

  std::string surf_model, surf_out = "surface.csv";
  int surf_i = 0, surf_j = 1, surf_res = 25;
  double surf_fixed = 0.5;
  CLI::App* surface = app.add_subcommand(
      "surface", "Sample a model's output over a 2-input grid (others fixed)");
  surface->add_option("--model", surf_model, "model JSON file")->required();
  surface->add_option("--i", surf_i, "first input index");
  surface->add_option("--j", surf_j, "second input index");
  surface->add_option("--resolution", surf_res, "grid points per axis (>= 2)");
  surface->add_option("--fixed", surf_fixed, "value held on the remaining inputs");
  surface->add_option("--out", surf_out, "output CSV path");

  std::vector<std::string> compare_paths;
  CLI::App* compare = app.add_subcommand(
      "compare", "Tabulate two or more runs reports side by side");
  compare->add_option("reports", compare_paths, "nftk-runs JSON files")
      ->expected(2, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (surface->parsed()) {
      return cmd_surface(surf_model, surf_i, surf_j, surf_res, surf_fixed, surf_out);
    }
    if (compare->parsed()) {
      return cmd_compare(compare_paths);
    }

    CLI::App* cmd = train_anfis->parsed() ? train_anfis : train_pso;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (cmd->count("--data")) cfg.data = data_flag;
    if (cmd->count("--target")) cfg.target = parse_target(target_flag);
    if (cmd->count("--out")) cfg.out = out_flag;
    if (cmd->count("--seeds")) cfg.seeds = parse_seed_list(seeds_flag);
    if (cmd->count("--seed")) cfg.seeds = {seed_flag};
    if (cmd->count("--radius")) cfg.gen.radius = radius_flag;
    if (cmd->count("--epochs")) cfg.anfis.epochs = epochs_flag;
    if (cmd->count("--iterations")) cfg.pso.iterations = iterations_flag;
    if (cmd->count("--swarm")) cfg.pso.swarm_size = swarm_flag;
    return cmd_train(cfg, cmd == train_pso);
  } catch (const nftk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nftk::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
