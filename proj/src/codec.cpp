#include "nftk/codec.hpp"

#include <cstddef>
#include <stdexcept>

namespace nftk {

namespace {

constexpr double kCenterLo = -0.25;
constexpr double kCenterHi = 1.25;
constexpr double kWidthLo = kMinShapeParam;
constexpr double kWidthHi = 2.0;
constexpr double kSlopeLo = 0.5;
constexpr double kSlopeHi = 5.0;
constexpr double kConsequentLo = -10.0;
constexpr double kConsequentHi = 10.0;

} // namespace

std::string premise_param_name(const Fis& fis, const ParamLayout::PremiseRef& ref) {
  const auto& mf = fis.input_mfs[static_cast<std::size_t>(ref.input)]
                                [static_cast<std::size_t>(ref.mf)];
  if (mf.kind == MfKind::gaussian) return ref.param == 0 ? "sigma" : "center";
  switch (ref.param) {
    case 0: return "a";
    case 1: return "b";
    default: return "c";
  }
}

ParamLayout param_layout(const Fis& fis) {
  ParamLayout layout;
  for (int i = 0; i < fis.n_inputs; ++i) {
    const auto& mfs = fis.input_mfs[static_cast<std::size_t>(i)];
    for (int m = 0; m < static_cast<int>(mfs.size()); ++m) {
      for (int p = 0; p < mfs[static_cast<std::size_t>(m)].param_count(); ++p) {
        layout.premise.push_back({i, m, p});
      }
    }
  }
  for (int r = 0; r < fis.n_rules(); ++r) {
    for (int c = 0; c <= fis.n_inputs; ++c) layout.consequent.push_back({r, c});
  }
  return layout;
}

Bounds param_bounds(const Fis& fis) {
  const ParamLayout layout = param_layout(fis);
  Bounds bounds;
  bounds.lower.resize(layout.total());
  bounds.upper.resize(layout.total());

  Index slot = 0;
  for (const auto& ref : layout.premise) {
    const std::string name = premise_param_name(fis, ref);
    if (name == "sigma" || name == "a") {
      bounds.lower[slot] = kWidthLo;
      bounds.upper[slot] = kWidthHi;
    } else if (name == "b") {
      bounds.lower[slot] = kSlopeLo;
      bounds.upper[slot] = kSlopeHi;
    } else {
      bounds.lower[slot] = kCenterLo;
      bounds.upper[slot] = kCenterHi;
    }
    ++slot;
  }
  for (Index c = 0; c < static_cast<Index>(layout.consequent.size()); ++c) {
    bounds.lower[slot] = kConsequentLo;
    bounds.upper[slot] = kConsequentHi;
    ++slot;
  }
  return bounds;
}

ParamVector encode_fis(const Fis& fis) {
  fis.validate();
  ParamVector pv;
  pv.layout = param_layout(fis);
  pv.bounds = param_bounds(fis);
  pv.values.resize(pv.layout.total());

  Index slot = 0;
  for (const auto& mfs : fis.input_mfs) {
    for (const auto& mf : mfs) {
      if (mf.kind == MfKind::gaussian) {
        pv.values[slot++] = mf.width;
        pv.values[slot++] = mf.center;
      } else {
        pv.values[slot++] = mf.width;
        pv.values[slot++] = mf.shape;
        pv.values[slot++] = mf.center;
      }
    }
  }
  for (const auto& con : fis.consequents) {
    pv.values.segment(slot, con.coefficients.size()) = con.coefficients;
    slot += con.coefficients.size();
    pv.values[slot++] = con.constant;
  }
  return pv;
}

DecodeResult decode_fis(const Fis& templ, VecRef values) {
  const ParamLayout layout = param_layout(templ);
  if (values.size() != layout.total()) {
    throw std::invalid_argument("decode_fis: expected " + std::to_string(layout.total()) +
                                " parameters, got " + std::to_string(values.size()));
  }
  const Bounds bounds = param_bounds(templ);

  DecodeResult out{templ, 0};
  Index slot = 0;
  auto take = [&]() {
    double v = values[slot];
    if (v < bounds.lower[slot]) {
      v = bounds.lower[slot];
      ++out.clipped;
    } else if (v > bounds.upper[slot]) {
      v = bounds.upper[slot];
      ++out.clipped;
    }
    ++slot;
    return v;
  };

  for (auto& mfs : out.fis.input_mfs) {
    for (auto& mf : mfs) {
      if (mf.kind == MfKind::gaussian) {
        mf.width = take();
        mf.center = take();
      } else {
        mf.width = take();
        mf.shape = take();
        mf.center = take();
      }
    }
  }
  for (auto& con : out.fis.consequents) {
    for (Index c = 0; c < con.coefficients.size(); ++c) con.coefficients[c] = take();
    con.constant = take();
  }
  return out;
}

} // namespace nftk
