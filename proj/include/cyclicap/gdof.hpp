#pragma once

#include <span>
#include <vector>

#include "cyclicap/channel.hpp"
#include "cyclicap/parallel.hpp"

namespace cyclicap {

/// Symmetric cyclic channel: SNR_i = snr, INR_i = snr^alpha for all users.
/// Requires snr > 1 (the log2(snr) normalization must be positive).
ChannelInstance symmetric_channel(int k, double snr, double alpha);

/// Generalized degrees of freedom of the symmetric capacity:
///   min{max(alpha, 1-alpha), 1-alpha/2}  for 0 <= alpha < 1
///   min{alpha/2, 1}                      for alpha >= 1
double dsym_formula(double alpha);

struct DsymBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Numeric GDoF estimate at finite snr: the symmetric max-min rate of the
/// achievable region under the ETW split (lower) and of the outer bound
/// (upper), both normalized by log2(snr). For alpha >= 1 the strong-regime
/// capacity region gives lower == upper.
DsymBounds dsym_numeric(int k, double alpha, double snr);

struct GdofPoint {
  double alpha = 0.0;
  double snr = 0.0;  // linear
  double dsym_lower = 0.0;
  double dsym_upper = 0.0;
  double dsym_formula = 0.0;
};

/// One GdofPoint per grid value; output order follows the input grid.
std::vector<GdofPoint> gdof_sweep(int k, std::span<const double> alphas, double snr,
                                  Exec exec = Exec::Par);

}  // namespace cyclicap
