#pragma once

#include <cmath>
#include <vector>

#include "cyclicap/channel.hpp"
#include "cyclicap/rng.hpp"
#include "cyclicap/sampling.hpp"

namespace cyclicap::test {

// SNR = (15, 15), INR = (3, 3): the running weak two-user example.
inline ChannelInstance canonical_k2() {
  return make_channel(2, {15.0, 15.0}, {3.0, 3.0});
}

inline bool close(double a, double b, double tol = 1e-12) {
  return std::fabs(a - b) <= tol;
}

}  // namespace cyclicap::test
