#include <cmath>
#include <numbers>
#include <stdexcept>

#include "critpoint/channel.hpp"

namespace critpoint {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
    : gen_(splitmix64(splitmix64(seed) + trial_index)) {}

int TrialRng::uniform_int(int bound) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  return static_cast<int>(gen_() % static_cast<std::uint64_t>(bound));
}

double TrialRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1p-53;          // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

double noise_variance(const BlockCode& code, const SnrPoint& snr) {
  const double rate = static_cast<double>(code.k_sym()) / static_cast<double>(code.n_sym());
  return 1.0 / (2.0 * rate * snr.linear());
}

std::vector<int> random_message(const BlockCode& code, TrialRng& rng) {
  const int cap = code.family() == CodeFamily::kRs ? code.field().order() : 2;
  std::vector<int> msg(code.k_sym());
  for (auto& s : msg) s = rng.uniform_int(cap);
  return msg;
}

SoftReceived transmit(const BlockCode& code, std::span<const int> message,
                      const SnrPoint& snr, TrialRng& rng) {
  const std::vector<int> cw = code.encode(message);
  const std::vector<std::uint8_t> bits = code.to_bits(cw);
  SoftReceived rx;
  rx.noise_sigma2 = noise_variance(code, snr);
  const double sigma = std::sqrt(rx.noise_sigma2);
  rx.samples.resize(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    rx.samples[i] = (bits[i] ? -1.0 : 1.0) + sigma * rng.gaussian();
  return rx;
}

std::vector<double> modulate(std::span<const std::uint8_t> bits) {
  std::vector<double> out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? -1.0 : 1.0;
  return out;
}

std::vector<std::uint8_t> hard_decisions(const SoftReceived& rx) {
  std::vector<std::uint8_t> bits(rx.samples.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rx.samples[i] >= 0.0 ? 0 : 1;
  return bits;
}

double euclidean_dist2(std::span<const double> samples, std::span<const std::uint8_t> bits) {
  if (samples.size() != bits.size()) throw std::invalid_argument("length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double diff = samples[i] - (bits[i] ? -1.0 : 1.0);
    acc += diff * diff;
  }
  return acc;
}

}  // namespace critpoint
