#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "critpoint/channel.hpp"
#include "critpoint/detail/parallel.hpp"
#include "critpoint/monte_carlo.hpp"
#include "critpoint/soft_decoders.hpp"

namespace critpoint {

DecoderId decoder_from_string(std::string_view s) {
  if (s == "bdd") return DecoderId::kBdd;
  if (s == "chase2") return DecoderId::kChase2;
  if (s == "gmd") return DecoderId::kGmd;
  if (s == "ml") return DecoderId::kMl;
  throw std::invalid_argument("unknown decoder id: " + std::string(s));
}

std::string_view to_string(DecoderId id) {
  switch (id) {
    case DecoderId::kBdd: return "bdd";
    case DecoderId::kChase2: return "chase2";
    case DecoderId::kGmd: return "gmd";
    case DecoderId::kMl: return "ml";
  }
  return "?";
}

McEstimate make_estimate(long long trials, long long word_errors) {
  McEstimate e;
  e.trials = trials;
  e.word_errors = word_errors;
  if (trials <= 0) return e;
  constexpr double z = 1.959963984540054;  // Phi^{-1}(0.975)
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(word_errors) / n;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + 0.5 * z2n) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
  e.wer_hat = p;
  // center - half cancels to zero algebraically at the extremes; pin the
  // exact endpoints rather than leave rounding residue
  e.ci95_low = word_errors == 0 ? 0.0 : std::max(0.0, center - half);
  e.ci95_high = word_errors == trials ? 1.0 : std::min(1.0, center + half);
  return e;
}

McEstimate run_monte_carlo(const BlockCode& code, DecoderId decoder, const SnrPoint& snr,
                           const StopRule& stop, std::uint64_t seed, int max_workers) {
  if (stop.max_trials <= 0 || stop.target_word_errors <= 0)
    throw std::invalid_argument("stop criteria must be positive");
  if (decoder == DecoderId::kGmd && code.family() != CodeFamily::kRs)
    throw std::domain_error("GMD requires an RS code");
  std::unique_ptr<MlCodebook> codebook;
  if (decoder == DecoderId::kMl) codebook = std::make_unique<MlCodebook>(code);

  auto run_trial = [&](long long index) -> bool {
    TrialRng rng(seed, static_cast<std::uint64_t>(index));
    const std::vector<int> msg = random_message(code, rng);
    const std::vector<int> sent = code.encode(msg);
    const SoftReceived rx = transmit(code, msg, snr, rng);
    switch (decoder) {
      case DecoderId::kBdd: {
        const HardDecodeOutcome out = code.decode_bdd(code.from_bits(hard_decisions(rx)));
        return out.kind != HardDecodeOutcome::Kind::kCorrected || out.codeword != sent;
      }
      case DecoderId::kChase2: return chase2_decode(code, rx).decided_symbols != sent;
      case DecoderId::kGmd: return gmd_decode(code, rx).decided_symbols != sent;
      case DecoderId::kMl: return codebook->decode(rx).decided_symbols != sent;
    }
    return true;
  };

  constexpr long long kChunk = 2048;
  long long trials = 0;
  long long errors = 0;
  std::vector<std::uint8_t> flags(kChunk);
  for (long long base = 0; base < stop.max_trials; base += kChunk) {
    const long long count = std::min(kChunk, stop.max_trials - base);
    detail::parallel_for(count, max_workers,
                         [&](long long i) { flags[i] = run_trial(base + i) ? 1 : 0; });
    for (long long i = 0; i < count; ++i) {
      ++trials;
      errors += flags[i];
      if (errors >= stop.target_word_errors) return make_estimate(trials, errors);
    }
  }
  return make_estimate(trials, errors);
}

}  // namespace critpoint
