#include "cyclicap/channel.hpp"

#include <cmath>

namespace cyclicap {

namespace {

int mod(int i, int k) { return ((i % k) + k) % k; }

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Weak: return "weak";
    case Regime::Strong: return "strong";
    case Regime::VeryStrong: return "very_strong";
    case Regime::Mixed: return "mixed";
  }
  return "unknown";
}

ChannelInstance make_channel(int k, std::vector<double> snr, std::vector<double> inr) {
  if (k < 2) {
    throw ValidationError(ValidationCode::UserCountTooSmall,
                          "channel needs at least 2 users, got " + std::to_string(k));
  }
  if (static_cast<int>(snr.size()) != k || static_cast<int>(inr.size()) != k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "snr/inr must each have length k=" + std::to_string(k));
  }
  for (int i = 0; i < k; ++i) {
    if (!(snr[i] > 0.0) || !std::isfinite(snr[i])) {
      throw ValidationError(ValidationCode::NonpositiveSnr,
                            "snr[" + std::to_string(i + 1) + "] must be positive");
    }
    if (!(inr[i] >= 0.0) || !std::isfinite(inr[i])) {
      throw ValidationError(ValidationCode::NegativeInr,
                            "inr[" + std::to_string(i + 1) + "] must be nonnegative");
    }
  }
  return ChannelInstance{k, std::move(snr), std::move(inr)};
}

Regime classify_regime(const ChannelInstance& ch) {
  const int k = ch.k;
  bool very_strong = true, strong = true, weak = true;
  for (int i = 0; i < k; ++i) {
    const double snr_prev = ch.snr[mod(i - 1, k)];
    if (!(ch.inr[i] >= (1.0 + snr_prev) * ch.snr[i])) very_strong = false;
    if (!(ch.inr[i] >= ch.snr[i])) strong = false;
    if (!(ch.inr[i] <= ch.snr[i])) weak = false;
  }
  if (very_strong) return Regime::VeryStrong;
  if (strong) return Regime::Strong;
  if (weak) return Regime::Weak;
  return Regime::Mixed;
}

PowerSplit etw_split(const ChannelInstance& ch) {
  PowerSplit s;
  s.inr_private.reserve(ch.k);
  for (double q : ch.inr) s.inr_private.push_back(std::min(q, 1.0));
  return s;
}

PowerSplit private_only_split(const ChannelInstance& ch) {
  return PowerSplit{ch.inr};
}

PowerSplit explicit_split(const ChannelInstance& ch, std::vector<double> inr_private) {
  if (static_cast<int>(inr_private.size()) != ch.k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "split must have length k=" + std::to_string(ch.k));
  }
  for (int i = 0; i < ch.k; ++i) {
    if (!(inr_private[i] >= 0.0) || !(inr_private[i] <= ch.inr[i])) {
      throw ValidationError(ValidationCode::SplitOutOfRange,
                            "inr_private[" + std::to_string(i + 1) +
                                "] must lie in [0, inr[i]]");
    }
  }
  return PowerSplit{std::move(inr_private)};
}

HkParams hk_params(const ChannelInstance& ch, const PowerSplit& split) {
  const int k = ch.k;
  if (static_cast<int>(split.inr_private.size()) != k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "split dimension does not match channel");
  }
  // Private share of the direct-link SNR. For inr = 0 the whole message is
  // private (avoids 0/0 in the ratio).
  std::vector<double> snr_p(k);
  for (int i = 0; i < k; ++i) {
    snr_p[i] = ch.inr[i] > 0.0 ? ch.snr[i] * (split.inr_private[i] / ch.inr[i])
                               : ch.snr[i];
  }
  HkParams p;
  p.a.resize(k); p.d.resize(k); p.e.resize(k); p.g.resize(k); p.r.resize(k);
  for (int i = 0; i < k; ++i) {
    const int n = mod(i + 1, k);
    const double nu = 1.0 + split.inr_private[n];  // noise + private interference at receiver i
    p.a[i] = std::log2((nu + snr_p[i]) / nu);
    p.d[i] = std::log2((nu + ch.snr[i]) / nu);
    p.e[i] = std::log2((1.0 + ch.inr[n] + snr_p[i]) / nu);
    p.g[i] = std::log2((1.0 + ch.inr[n] + ch.snr[i]) / nu);
  }
  for (int i = 0; i < k; ++i) {
    double sum_e = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j != i && j != mod(i - 1, k)) sum_e += p.e[j];
    }
    p.r[i] = p.a[mod(i - 1, k)] + p.g[i] + sum_e;
  }
  return p;
}

OuterParams outer_params(const ChannelInstance& ch) {
  const int k = ch.k;
  OuterParams p;
  p.alpha.resize(k); p.beta.resize(k); p.gamma.resize(k);
  p.lambda.resize(k); p.mu.resize(k); p.rho.resize(k);
  for (int i = 0; i < k; ++i) {
    const int n = mod(i + 1, k);
    p.alpha[i] = std::log2(1.0 + ch.inr[n] + ch.snr[i] / (1.0 + ch.inr[i]));
    p.beta[i] = std::log2((1.0 + ch.snr[i]) / (1.0 + ch.inr[i]));
    p.gamma[i] = std::log2(1.0 + ch.inr[n] + ch.snr[i]);
    p.lambda[i] = std::log2(1.0 + ch.snr[i]);
    p.mu[i] = std::log2(1.0 + ch.inr[i]);
  }
  for (int i = 0; i < k; ++i) {
    double sum_a = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j != i && j != mod(i - 1, k)) sum_a += p.alpha[j];
    }
    p.rho[i] = p.beta[mod(i - 1, k)] + p.gamma[i] + sum_a;
  }
  return p;
}

IneqReport useful_inequalities(const ChannelInstance& ch, const HkParams& hk,
                               const OuterParams& ob) {
  constexpr double kTol = 1e-9;
  const int k = ch.k;
  if (static_cast<int>(hk.a.size()) != k || static_cast<int>(ob.alpha.size()) != k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "parameter dimensions do not match the channel");
  }
  IneqReport rep;
  rep.regime = classify_regime(ch);
  rep.all_pass = true;
  for (int i = 0; i < k; ++i) {
    const int prev = mod(i - 1, k);
    IneqUserReport u;
    u.user = i + 1;
    auto add = [&](std::string name, double delta, double bound, bool exact) {
      IneqCheck c{std::move(name), delta, bound, exact, delta <= bound + kTol};
      rep.all_pass = rep.all_pass && c.pass;
      u.checks.push_back(std::move(c));
    };
    add("lambda_minus_d", ob.lambda[i] - hk.d[i], 1.0, false);
    add("lambda_minus_a_plus_e_prev", ob.lambda[i] - (hk.a[i] + hk.e[prev]), 2.0, false);
    add("beta_minus_a", ob.beta[i] - hk.a[i], 1.0, false);
    add("alpha_minus_e", ob.alpha[i] - hk.e[i], 1.0, false);
    add("gamma_minus_g", ob.gamma[i] - hk.g[i], 1.0, true);
    add("mu_minus_e_prev", ob.mu[i] - hk.e[prev], 1.0, false);
    rep.users.push_back(std::move(u));
  }
  return rep;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace cyclicap
