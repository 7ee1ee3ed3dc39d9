#include "nftk/metrics.hpp"

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "nftk/errors.hpp"

namespace nftk {

int classify(double output, double threshold) {
  if (!std::isfinite(output)) throw std::invalid_argument("classify: non-finite output");
  return output >= threshold ? 1 : 0;
}

std::vector<int> classify_all(VecRef outputs, double threshold) {
  std::vector<int> classes(static_cast<std::size_t>(outputs.size()));
  for (Index i = 0; i < outputs.size(); ++i) {
    classes[static_cast<std::size_t>(i)] = classify(outputs[i], threshold);
  }
  return classes;
}

std::vector<int> to_classes(VecRef targets) {
  std::vector<int> classes(static_cast<std::size_t>(targets.size()));
  for (Index i = 0; i < targets.size(); ++i) {
    if (targets[i] == 0.0) {
      classes[static_cast<std::size_t>(i)] = 0;
    } else if (targets[i] == 1.0) {
      classes[static_cast<std::size_t>(i)] = 1;
    } else {
      throw DataError("to_classes: target at row " + std::to_string(i) +
                      " is not 0 or 1");
    }
  }
  return classes;
}

ConfusionMatrix confusion(const std::vector<int>& predictions,
                          const std::vector<int>& labels) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("confusion: predictions and labels differ in length");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if ((predictions[i] != 0 && predictions[i] != 1) ||
        (labels[i] != 0 && labels[i] != 1)) {
      throw std::invalid_argument("confusion: classes must be 0 or 1 (entry " +
                                  std::to_string(i) + ")");
    }
    if (labels[i] == 1) {
      (predictions[i] == 1 ? cm.tp : cm.fn) += 1;
    } else {
      (predictions[i] == 1 ? cm.fp : cm.tn) += 1;
    }
  }
  return cm;
}

MetricsSummary summarize(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw std::invalid_argument("summarize: empty confusion matrix");
  MetricsSummary s;
  s.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
  if (cm.tp + cm.fn > 0) {
    s.sensitivity = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  }
  if (cm.tn + cm.fp > 0) {
    s.specificity = static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp);
  }
  return s;
}

std::string metrics_table(const ConfusionMatrix& cm, const MetricsSummary& s) {
  auto rate = [](const std::optional<double>& v) -> std::string {
    if (!v) return "undefined";
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << *v;
    return out.str();
  };
  std::ostringstream out;
  out << "              predicted 1  predicted 0\n";
  out << "actual 1      " << std::setw(11) << cm.tp << "  " << std::setw(11) << cm.fn << "\n";
  out << "actual 0      " << std::setw(11) << cm.fp << "  " << std::setw(11) << cm.tn << "\n";
  out << "accuracy      " << rate(s.accuracy) << "\n";
  out << "sensitivity   " << rate(s.sensitivity) << "\n";
  out << "specificity   " << rate(s.specificity) << "\n";
  return out.str();
}

} // namespace nftk
