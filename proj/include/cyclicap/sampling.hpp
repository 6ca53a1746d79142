#pragma once

#include "cyclicap/channel.hpp"
#include "cyclicap/rng.hpp"

namespace cyclicap {

/// Random weak instance: per user, SNR_dB ~ U[0, 40] then
/// INR_dB ~ U[-10, SNR_dB], drawn in user order.
ChannelInstance sample_weak_channel(int k, Pcg32& rng);

/// Weak instance with every INR >= 1: INR_dB ~ U[0, SNR_dB]. This is the
/// regime in which the gamma - g = 1 identity is exact.
ChannelInstance sample_weak_channel_inr_above_one(int k, Pcg32& rng);

/// Random strong instance: SNR_dB ~ U[0, 30], INR_dB ~ U[SNR_dB, SNR_dB + 20].
ChannelInstance sample_strong_channel(int k, Pcg32& rng);

/// Random very strong instance: SNR_dB ~ U[0, 15] for all users, then
/// INR_i = (1 + SNR_{i-1}) SNR_i scaled up by U[0, 10] dB.
ChannelInstance sample_very_strong_channel(int k, Pcg32& rng);

}  // namespace cyclicap
