#pragma once

#include <cstdint>
#include <vector>

#include "critpoint/block_code.hpp"
#include "critpoint/channel.hpp"

namespace critpoint {

struct SoftDecodeResult {
  std::vector<int> decided_symbols;
  std::vector<std::uint8_t> decided_bits;
  double euclidean_dist2 = 0.0;
  long long candidates_tested = 0;
  bool fallback = false;  // no candidate survived; hard-decision word returned
};

// Chase algorithm-2 on the binary image: flip every subset of the
// floor(d_img/2) least-reliable bit positions (ties broken by lower index),
// hard-decode each pattern with the algebraic BDD, and keep the candidate
// whose modulated image is closest to the received vector.
SoftDecodeResult chase2_decode(const BlockCode& code, const SoftReceived& rx);

// Forney GMD for RS codes: erase the s least-reliable symbols (reliability =
// sum of |sample| over the symbol's bits) for s = 0, 2, 4, ... <= d-1 and
// keep the closest surviving errors-and-erasures candidate.
SoftDecodeResult gmd_decode(const BlockCode& code, const SoftReceived& rx);

// Exact MLD oracle by full codebook enumeration; refuses 2^k_bits > 2^16.
// The codebook variant amortizes enumeration across many trials.
class MlCodebook {
 public:
  explicit MlCodebook(const BlockCode& code);
  SoftDecodeResult decode(const SoftReceived& rx) const;
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<std::vector<std::uint8_t>> images_;
  std::vector<std::vector<int>> words_;
};

SoftDecodeResult ml_decode_exhaustive(const BlockCode& code, const SoftReceived& rx);

}  // namespace critpoint
