#include "nftk/fis_io.hpp"

#include <fstream>

#include "nftk/errors.hpp"

namespace nftk {

namespace {

nlohmann::ordered_json mf_to_json(const MembershipFunction& mf) {
  nlohmann::ordered_json j;
  if (mf.kind == MfKind::gaussian) {
    j["kind"] = "gaussian";
    j["sigma"] = mf.width;
    j["center"] = mf.center;
  } else {
    j["kind"] = "gbell";
    j["a"] = mf.width;
    j["b"] = mf.shape;
    j["c"] = mf.center;
  }
  return j;
}

MembershipFunction mf_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "gaussian") {
    return MembershipFunction::gaussian(j.at("sigma").get<double>(),
                                        j.at("center").get<double>());
  }
  if (kind == "gbell") {
    return MembershipFunction::gbell(j.at("a").get<double>(), j.at("b").get<double>(),
                                     j.at("c").get<double>());
  }
  throw DataError("unknown membership function kind: " + kind);
}

} // namespace

nlohmann::ordered_json fis_to_json(const Fis& fis) {
  nlohmann::ordered_json j;
  j["format"] = "nftk-fis";
  j["version"] = 1;
  j["n_inputs"] = fis.n_inputs;

  auto inputs = nlohmann::ordered_json::array();
  for (const auto& mfs : fis.input_mfs) {
    auto list = nlohmann::ordered_json::array();
    for (const auto& mf : mfs) list.push_back(mf_to_json(mf));
    inputs.push_back(nlohmann::ordered_json{{"mfs", std::move(list)}});
  }
  j["inputs"] = std::move(inputs);

  auto rules = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < fis.rules.size(); ++r) {
    nlohmann::ordered_json rule;
    rule["antecedents"] = fis.rules[r];
    const auto& con = fis.consequents[r];
    rule["coefficients"] =
        std::vector<double>(con.coefficients.data(), con.coefficients.data() + con.coefficients.size());
    rule["constant"] = con.constant;
    rules.push_back(std::move(rule));
  }
  j["rules"] = std::move(rules);
  return j;
}

Fis fis_from_json(const nlohmann::json& j) {
  try {
    if (j.value("format", "") != "nftk-fis") {
      throw DataError("not a nftk-fis document");
    }
    Fis fis;
    fis.n_inputs = j.at("n_inputs").get<int>();
    for (const auto& input : j.at("inputs")) {
      std::vector<MembershipFunction> mfs;
      for (const auto& mj : input.at("mfs")) mfs.push_back(mf_from_json(mj));
      fis.input_mfs.push_back(std::move(mfs));
    }
    for (const auto& rule : j.at("rules")) {
      fis.rules.push_back(rule.at("antecedents").get<std::vector<int>>());
      RuleConsequent con;
      const auto coeffs = rule.at("coefficients").get<std::vector<double>>();
      con.coefficients = Eigen::Map<const VectorXd>(coeffs.data(),
                                                    static_cast<Index>(coeffs.size()));
      con.constant = rule.at("constant").get<double>();
      fis.consequents.push_back(std::move(con));
    }
    fis.validate();
    return fis;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed FIS document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("invalid FIS document: ") + e.what());
  }
}

void save_fis(const Fis& fis, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write FIS file: " + path);
  out << fis_to_json(fis).dump(2) << "\n";
}

Fis load_fis(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open FIS file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("cannot parse FIS file " + path + ": " + e.what());
  }
  return fis_from_json(j);
}

} // namespace nftk
