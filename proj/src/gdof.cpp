#include "cyclicap/gdof.hpp"

#include <cmath>

#include "cyclicap/polyhedra.hpp"
#include "cyclicap/regions.hpp"

namespace cyclicap {

ChannelInstance symmetric_channel(int k, double snr, double alpha) {
  if (!(snr > 1.0)) {
    throw ValidationError(ValidationCode::BadParameter,
                          "symmetric channel requires snr > 1");
  }
  if (!(alpha >= 0.0)) {
    throw ValidationError(ValidationCode::BadParameter, "alpha must be >= 0");
  }
  const double inr = std::pow(snr, alpha);
  return make_channel(k, std::vector<double>(k, snr), std::vector<double>(k, inr));
}

double dsym_formula(double alpha) {
  if (alpha < 1.0) {
    return std::min(std::max(alpha, 1.0 - alpha), 1.0 - alpha / 2.0);
  }
  return std::min(alpha / 2.0, 1.0);
}

DsymBounds dsym_numeric(int k, double alpha, double snr) {
  const ChannelInstance ch = symmetric_channel(k, snr, alpha);
  const double norm = std::log2(snr);
  if (alpha >= 1.0) {
    const double v = symmetric_max(strong_region(ch), k) / norm;
    return {v, v};
  }
  const HkParams hk = hk_params(ch, etw_split(ch));
  const OuterParams ob = outer_params(ch);
  return {symmetric_max(achievable_region(hk, k), k) / norm,
          symmetric_max(outer_region(ob, k), k) / norm};
}

std::vector<GdofPoint> gdof_sweep(int k, std::span<const double> alphas, double snr,
                                  Exec exec) {
  if (alphas.empty()) {
    throw ValidationError(ValidationCode::BadParameter, "alpha grid must be nonempty");
  }
  // validate up front: the loop body must not throw once parallel
  if (!(snr > 1.0)) {
    throw ValidationError(ValidationCode::BadParameter,
                          "symmetric channel requires snr > 1");
  }
  for (double a : alphas) {
    if (!(a >= 0.0)) {
      throw ValidationError(ValidationCode::BadParameter, "alpha must be >= 0");
    }
  }
  std::vector<GdofPoint> out(alphas.size());
  parallel_for(exec, static_cast<int>(alphas.size()), [&](int i) {
    const double alpha = alphas[i];
    const DsymBounds b = dsym_numeric(k, alpha, snr);
    out[i] = GdofPoint{alpha, snr, b.lower, b.upper, dsym_formula(alpha)};
  });
  return out;
}

}  // namespace cyclicap
