#pragma once

#include <string>
#include <vector>

#include "nftk/fuzzy.hpp"
#include "nftk/pso.hpp"

namespace nftk {

/// Maps each flat-vector slot back to its place in the FIS. Premise entries
/// come first (input-major, MF-major, per-MF parameter order), then all
/// consequent entries rule-major with the constant after the coefficients.
struct ParamLayout {
  struct PremiseRef {
    int input = 0;
    int mf = 0;
    int param = 0;  // gaussian: 0 sigma, 1 center; gbell: 0 a, 1 b, 2 c
  };
  struct ConsequentRef {
    int rule = 0;
    int coeff = 0;  // == n_inputs means the constant
  };

  std::vector<PremiseRef> premise;
  std::vector<ConsequentRef> consequent;

  int premise_count() const { return static_cast<int>(premise.size()); }
  int total() const { return static_cast<int>(premise.size() + consequent.size()); }
};

/// Human-readable name for a premise slot ("sigma", "center", "a", "b", "c").
std::string premise_param_name(const Fis& fis, const ParamLayout::PremiseRef& ref);

/// Flat parameter vector with its layout and search bounds.
struct ParamVector {
  VectorXd values;
  ParamLayout layout;
  Bounds bounds;
};

/// Search box used for PSO over FIS parameters: centers in [-0.25, 1.25]
/// (normalized input space with margin), widths in [1e-3, 2], bell slopes in
/// [0.5, 5], consequent entries in [-10, 10].
Bounds param_bounds(const Fis& fis);

ParamLayout param_layout(const Fis& fis);

/// Canonical flat encoding; decode_fis(fis, encode_fis(fis).values) is exact.
ParamVector encode_fis(const Fis& fis);

struct DecodeResult {
  Fis fis;
  int clipped = 0;  // entries pulled back inside the bounds
};

/// FIS with the template's structure and v's parameters. Out-of-bounds
/// entries are clipped and counted. Throws on length mismatch.
DecodeResult decode_fis(const Fis& templ, VecRef values);

} // namespace nftk
