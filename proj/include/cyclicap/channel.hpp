#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclicap {

/// Interference regime of a cyclic Gaussian interference channel.
/// VeryStrong implies Strong; boundary (equality) cases classify as the
/// stronger label, checked in order VeryStrong, Strong, Weak.
enum class Regime { Weak, Strong, VeryStrong, Mixed };

std::string to_string(Regime r);

enum class ValidationCode {
  UserCountTooSmall,
  LengthMismatch,
  NonpositiveSnr,
  NegativeInr,
  SplitOutOfRange,
  IndexOutOfRange,
  WrongRegime,
  BadParameter,
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ValidationCode code() const { return code_; }

 private:
  ValidationCode code_;
};

/// K-user cyclic Gaussian interference channel, parameterized by the
/// received signal- and interference-to-noise ratios in linear scale.
/// Transmitter i is heard by receiver i (SNR_i) and interferes only with
/// receiver i-1 (INR_i); user indices wrap modulo K (K+1 = 1, 1-1 = K).
/// Internally 0-based; all external labels are 1-based.
struct ChannelInstance {
  int k = 0;
  std::vector<double> snr;  // linear, > 0
  std::vector<double> inr;  // linear, >= 0
};

/// Validates and builds a channel. Throws ValidationError with a distinct
/// code for: k < 2, sequence length mismatch, snr <= 0, inr < 0.
ChannelInstance make_channel(int k, std::vector<double> snr, std::vector<double> inr);

Regime classify_regime(const ChannelInstance& ch);

/// Common/private power split, given as the private-message INR of
/// transmitter i at receiver i-1. Bounds: 0 <= inr_private[i] <= inr[i].
struct PowerSplit {
  std::vector<double> inr_private;
};

/// ETW split: inr_private[i] = min(inr[i], 1).
PowerSplit etw_split(const ChannelInstance& ch);

/// Everything private: inr_private[i] = inr[i].
PowerSplit private_only_split(const ChannelInstance& ch);

/// Validates an explicit split against the channel.
PowerSplit explicit_split(const ChannelInstance& ch, std::vector<double> inr_private);

/// Per-user rate quantities of the compact achievable region, in bits:
///   a[i]  private rate cap at receiver i,
///   d[i]  single-user cap with the neighbor's common part removed,
///   e[i]  private-plus-incoming-common cap,
///   g[i]  full per-receiver cap,
///   r[i]  = a[i-1] + g[i] + sum_{j not in {i,i-1}} e[j].
/// With nu_i = 1 + inr_private[i+1] and SNR_ip the private SNR share:
///   a[i] = log2((nu_i + SNR_ip)/nu_i)       d[i] = log2((nu_i + SNR_i)/nu_i)
///   e[i] = log2((1 + INR_{i+1} + SNR_ip)/nu_i)
///   g[i] = log2((1 + INR_{i+1} + SNR_i)/nu_i)
struct HkParams {
  std::vector<double> a, d, e, g, r;
};

HkParams hk_params(const ChannelInstance& ch, const PowerSplit& split);

/// Per-user quantities of the capacity outer bound, in bits:
///   alpha[i] = log2(1 + INR_{i+1} + SNR_i/(1+INR_i))
///   beta[i]  = log2((1+SNR_i)/(1+INR_i))
///   gamma[i] = log2(1 + INR_{i+1} + SNR_i)
///   lambda[i]= log2(1+SNR_i)          mu[i] = log2(1+INR_i)
///   rho[i]   = beta[i-1] + gamma[i] + sum_{j not in {i,i-1}} alpha[j]
struct OuterParams {
  std::vector<double> alpha, beta, gamma, lambda, mu, rho;
};

OuterParams outer_params(const ChannelInstance& ch);

/// One inner-vs-outer parameter delta with its claimed bound.
struct IneqCheck {
  std::string name;
  double delta = 0.0;
  double bound = 0.0;
  bool exact = false;  // the bound is claimed as an identity, not just <=
  bool pass = false;   // delta <= bound (+1e-9)
};

struct IneqUserReport {
  int user = 0;  // 1-based
  std::vector<IneqCheck> checks;
};

/// Per-user deltas between outer-bound and achievable parameters under the
/// ETW split, with bounds (1, 2, 1, 1, =1, 1). Out-of-regime inputs are
/// reported, not rejected; the regime tag tells the caller what is claimed.
/// The gamma-g identity is exact only when INR_{i+1} >= 1 (otherwise the
/// delta equals log2(1 + INR_{i+1}) < 1 and still passes the <= direction).
struct IneqReport {
  Regime regime = Regime::Weak;
  std::vector<IneqUserReport> users;
  bool all_pass = false;
};

IneqReport useful_inequalities(const ChannelInstance& ch, const HkParams& hk,
                               const OuterParams& ob);

/// dB <-> linear conversions. The library stores linear values throughout;
/// dB appears only at the CLI boundary and in the instance samplers.
double db_to_linear(double db);
double linear_to_db(double lin);

}  // namespace cyclicap
