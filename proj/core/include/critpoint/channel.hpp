#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "critpoint/block_code.hpp"
#include "critpoint/bounds.hpp"

namespace critpoint {

// Matched-filter outputs for one transmitted word over BPSK/AWGN: bit b maps
// to (-1)^b and picks up i.i.d. Gaussian noise of variance 1/(2 R ebn0).
struct SoftReceived {
  std::vector<double> samples;  // length n_bits of the code
  double noise_sigma2 = 0.0;
};

// Reproducible per-trial random stream, scheme "trial-split-v1": a
// mersenne-twister-64 seeded with splitmix64(splitmix64(seed) + trial_index).
// Gaussians come from Box-Muller on 53-bit uniforms (u1 shifted into (0,1]
// so the log never sees zero); std::normal_distribution is avoided because
// its algorithm is implementation-defined. Within a trial the draw order is
// fixed: message symbols first, then one noise value per bit.
class TrialRng {
 public:
  static constexpr const char* kSchemeId = "trial-split-v1";

  TrialRng(std::uint64_t seed, std::uint64_t trial_index);

  std::uint64_t next_u64() { return gen_(); }
  // uniform in [0, bound); used with power-of-two bounds where it is exact
  int uniform_int(int bound);
  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

double noise_variance(const BlockCode& code, const SnrPoint& snr);

std::vector<int> random_message(const BlockCode& code, TrialRng& rng);

SoftReceived transmit(const BlockCode& code, std::span<const int> message,
                      const SnrPoint& snr, TrialRng& rng);

std::vector<double> modulate(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> hard_decisions(const SoftReceived& rx);  // sample >= 0 -> bit 0
double euclidean_dist2(std::span<const double> samples, std::span<const std::uint8_t> bits);

}  // namespace critpoint
