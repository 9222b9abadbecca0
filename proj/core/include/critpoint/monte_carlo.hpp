#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "critpoint/block_code.hpp"
#include "critpoint/bounds.hpp"

namespace critpoint {

enum class DecoderId { kBdd, kChase2, kGmd, kMl };

DecoderId decoder_from_string(std::string_view s);
std::string_view to_string(DecoderId id);

struct StopRule {
  long long max_trials = 0;
  long long target_word_errors = 0;  // stop at whichever comes first
};

struct McEstimate {
  long long trials = 0;
  long long word_errors = 0;
  double wer_hat = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

// 95% Wilson score interval for word_errors successes in trials draws.
McEstimate make_estimate(long long trials, long long word_errors);

// Deterministic Monte-Carlo WER run: trial i derives its own RNG stream from
// (seed, i), so the outcome is a pure function of the arguments. Trials are
// processed in fixed-size chunks whose flags are scanned in index order for
// the stop rule; workers only race on disjoint flag slots, so the estimate is
// identical for any worker count (max_workers 0 = hardware default).
McEstimate run_monte_carlo(const BlockCode& code, DecoderId decoder, const SnrPoint& snr,
                           const StopRule& stop, std::uint64_t seed, int max_workers = 0);

}  // namespace critpoint
