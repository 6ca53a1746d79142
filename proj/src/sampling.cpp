#include "cyclicap/sampling.hpp"

#include <vector>

namespace cyclicap {

ChannelInstance sample_weak_channel(int k, Pcg32& rng) {
  std::vector<double> snr(k), inr(k);
  for (int i = 0; i < k; ++i) {
    const double snr_db = rng.uniform(0.0, 40.0);
    const double inr_db = rng.uniform(-10.0, snr_db);
    snr[i] = db_to_linear(snr_db);
    inr[i] = db_to_linear(inr_db);
  }
  return make_channel(k, std::move(snr), std::move(inr));
}

ChannelInstance sample_weak_channel_inr_above_one(int k, Pcg32& rng) {
  std::vector<double> snr(k), inr(k);
  for (int i = 0; i < k; ++i) {
    const double snr_db = rng.uniform(0.0, 40.0);
    const double inr_db = rng.uniform(0.0, snr_db);
    snr[i] = db_to_linear(snr_db);
    inr[i] = db_to_linear(inr_db);
  }
  return make_channel(k, std::move(snr), std::move(inr));
}

ChannelInstance sample_strong_channel(int k, Pcg32& rng) {
  std::vector<double> snr(k), inr(k);
  for (int i = 0; i < k; ++i) {
    const double snr_db = rng.uniform(0.0, 30.0);
    const double inr_db = snr_db + rng.uniform(0.0, 20.0);
    snr[i] = db_to_linear(snr_db);
    inr[i] = db_to_linear(inr_db);
  }
  return make_channel(k, std::move(snr), std::move(inr));
}

ChannelInstance sample_very_strong_channel(int k, Pcg32& rng) {
  std::vector<double> snr(k), inr(k);
  for (int i = 0; i < k; ++i) snr[i] = db_to_linear(rng.uniform(0.0, 15.0));
  for (int i = 0; i < k; ++i) {
    const int prev = (i + k - 1) % k;
    inr[i] = (1.0 + snr[prev]) * snr[i] * db_to_linear(rng.uniform(0.0, 10.0));
  }
  return make_channel(k, std::move(snr), std::move(inr));
}

}  // namespace cyclicap
