#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "critpoint/soft_decoders.hpp"

namespace critpoint {
namespace {

SoftDecodeResult hard_fallback(const BlockCode& code, const SoftReceived& rx,
                               long long candidates_tested) {
  SoftDecodeResult out;
  out.decided_bits = hard_decisions(rx);
  out.decided_symbols = code.from_bits(out.decided_bits);
  out.euclidean_dist2 = euclidean_dist2(rx.samples, out.decided_bits);
  out.candidates_tested = candidates_tested;
  out.fallback = true;
  return out;
}

void check_length(const BlockCode& code, const SoftReceived& rx) {
  if (static_cast<int>(rx.samples.size()) != code.n_bits())
    throw std::invalid_argument("received length must be n_bits");
}

}  // namespace

SoftDecodeResult chase2_decode(const BlockCode& code, const SoftReceived& rx) {
  check_length(code, rx);
  const int q = code.image_min_distance().value / 2;
  const int nb = code.n_bits();

  std::vector<int> order(nb);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ra = std::fabs(rx.samples[a]);
    const double rb = std::fabs(rx.samples[b]);
    return ra != rb ? ra < rb : a < b;
  });
  const std::vector<std::uint8_t> hard = hard_decisions(rx);

  bool found = false;
  double best_d2 = 0.0;
  std::vector<int> best_word;
  std::vector<std::uint8_t> pattern_bits;
  for (std::uint32_t pattern = 0; pattern < (1u << q); ++pattern) {
    pattern_bits = hard;
    for (int j = 0; j < q; ++j)
      if (pattern & (1u << j)) pattern_bits[order[j]] ^= 1;
    const HardDecodeOutcome out = code.decode_bdd(code.from_bits(pattern_bits));
    if (out.kind != HardDecodeOutcome::Kind::kCorrected) continue;
    const double d2 = euclidean_dist2(rx.samples, code.to_bits(out.codeword));
    if (!found || d2 < best_d2) {
      found = true;
      best_d2 = d2;
      best_word = out.codeword;
    }
  }
  const long long tested = 1ll << q;
  if (!found) return hard_fallback(code, rx, tested);

  SoftDecodeResult res;
  res.decided_symbols = std::move(best_word);
  res.decided_bits = code.to_bits(res.decided_symbols);
  res.euclidean_dist2 = best_d2;
  res.candidates_tested = tested;
  return res;
}

SoftDecodeResult gmd_decode(const BlockCode& code, const SoftReceived& rx) {
  if (code.family() != CodeFamily::kRs)
    throw std::domain_error("GMD requires symbol-level reliabilities (RS only)");
  check_length(code, rx);
  const int m = code.bits_per_symbol();
  const int n = code.n_sym();

  std::vector<double> reliability(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b) reliability[i] += std::fabs(rx.samples[i * m + b]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return reliability[a] != reliability[b] ? reliability[a] < reliability[b] : a < b;
  });

  const std::vector<int> hard = code.from_bits(hard_decisions(rx));

  bool found = false;
  double best_d2 = 0.0;
  std::vector<int> best_word;
  long long attempts = 0;
  for (int s = 0; s <= code.d_design() - 1; s += 2) {
    const std::vector<int> erasures(order.begin(), order.begin() + s);
    const HardDecodeOutcome out = code.decode_bdd(hard, erasures);
    ++attempts;
    if (out.kind != HardDecodeOutcome::Kind::kCorrected) continue;
    const double d2 = euclidean_dist2(rx.samples, code.to_bits(out.codeword));
    if (!found || d2 < best_d2) {
      found = true;
      best_d2 = d2;
      best_word = out.codeword;
    }
  }
  if (!found) return hard_fallback(code, rx, attempts);

  SoftDecodeResult res;
  res.decided_symbols = std::move(best_word);
  res.decided_bits = code.to_bits(res.decided_symbols);
  res.euclidean_dist2 = best_d2;
  res.candidates_tested = attempts;
  return res;
}

MlCodebook::MlCodebook(const BlockCode& code) {
  const int kb = code.k_bits();
  if (kb > 16) throw std::domain_error("dimension too large for exhaustive MLD");
  std::vector<std::uint8_t> mbits(kb, 0);
  images_.reserve(1u << kb);
  words_.reserve(1u << kb);
  for (std::uint32_t msg = 0; msg < (1u << kb); ++msg) {
    for (int b = 0; b < kb; ++b) mbits[b] = (msg >> b) & 1;
    words_.push_back(code.encode(code.from_bits(mbits)));
    images_.push_back(code.to_bits(words_.back()));
  }
}

SoftDecodeResult MlCodebook::decode(const SoftReceived& rx) const {
  if (rx.samples.size() != images_.front().size())
    throw std::invalid_argument("received length must be n_bits");
  std::size_t best = 0;
  double best_d2 = euclidean_dist2(rx.samples, images_[0]);
  for (std::size_t i = 1; i < images_.size(); ++i) {
    const double d2 = euclidean_dist2(rx.samples, images_[i]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  SoftDecodeResult res;
  res.decided_symbols = words_[best];
  res.decided_bits = images_[best];
  res.euclidean_dist2 = best_d2;
  res.candidates_tested = static_cast<long long>(images_.size());
  return res;
}

SoftDecodeResult ml_decode_exhaustive(const BlockCode& code, const SoftReceived& rx) {
  return MlCodebook(code).decode(rx);
}

}  // namespace critpoint
