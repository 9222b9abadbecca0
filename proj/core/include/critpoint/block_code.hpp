#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critpoint/galois.hpp"

namespace critpoint {

enum class CodeFamily { kHamming, kBch, kRs };

struct HardDecodeOutcome {
  enum class Kind { kCorrected, kFailure };
  Kind kind = Kind::kFailure;
  std::vector<int> codeword;  // valid codeword when kCorrected, else the input word
  int symbol_errors = 0;      // non-erased positions changed (kCorrected only)
};

struct ImageDistance {
  int value = 0;
  bool exact = false;  // false: designed distance used as stand-in
};

// Cyclic BCH/RS codes of length 2^m - 1 with systematic encoding and
// errors-and-erasures Berlekamp-Massey bounded-distance decoding. Binary
// codes (Hamming/BCH) carry one bit per symbol; RS symbols expand to m bits
// under the natural polynomial-basis mapping, LSB first. Objects are
// immutable after construction and safe to share across threads.
class BlockCode {
 public:
  static BlockCode bch(int m, int expected_k, int d_design);  // n = 2^m - 1
  static BlockCode rs(int m, int k_sym);                      // d = n - k + 1
  static BlockCode from_id(std::string_view id);
  static const std::vector<std::string>& catalog();

  const std::string& id() const { return id_; }
  CodeFamily family() const { return family_; }
  const GaloisField& field() const { return gf_; }
  int n_sym() const { return n_; }
  int k_sym() const { return k_; }
  int d_design() const { return d_; }
  int bits_per_symbol() const { return family_ == CodeFamily::kRs ? gf_.m() : 1; }
  int n_bits() const { return n_ * bits_per_symbol(); }
  int k_bits() const { return k_ * bits_per_symbol(); }
  const std::vector<int>& generator() const { return gen_; }
  ImageDistance image_min_distance() const { return image_d_; }

  std::vector<int> encode(std::span<const int> message) const;
  std::vector<int> syndromes(std::span<const int> word) const;  // S_1..S_{d-1}
  bool is_codeword(std::span<const int> word) const;

  // Berlekamp-Massey with erasure-locator initialization; corrects every
  // pattern with 2*(symbol errors) + |erasures| < d_design. Values at erased
  // positions are ignored. A Corrected outcome always verifies to a zero
  // syndrome; anything inconsistent (locator degree vs. root count, non-0/1
  // magnitudes for binary codes, residual syndrome) is a Failure.
  HardDecodeOutcome decode_bdd(std::span<const int> received,
                               std::span<const int> erasures = {}) const;

  std::vector<std::uint8_t> to_bits(std::span<const int> symbols) const;
  std::vector<int> from_bits(std::span<const std::uint8_t> bits) const;

  // exact minimum nonzero image weight by enumeration; refuses 2^k_bits > 2^20
  int min_distance_exhaustive() const;

 private:
  BlockCode(CodeFamily family, GaloisField gf, int n, int k, int d,
            std::vector<int> gen, std::string id);

  CodeFamily family_;
  GaloisField gf_;
  int n_, k_, d_;
  std::vector<int> gen_;
  std::string id_;
  ImageDistance image_d_;
};

}  // namespace critpoint
