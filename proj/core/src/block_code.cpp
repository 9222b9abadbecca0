#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "critpoint/block_code.hpp"

namespace critpoint {
namespace {

// cyclotomic coset of e mod 2^m - 1
std::vector<int> coset_of(int e, int n) {
  std::vector<int> out;
  int c = e;
  do {
    out.push_back(c);
    c = (2 * c) % n;
  } while (c != e);
  return out;
}

std::vector<int> shift_up(const std::vector<int>& p) {
  std::vector<int> out(p.size(), 0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

}  // namespace

BlockCode::BlockCode(CodeFamily family, GaloisField gf, int n, int k, int d,
                     std::vector<int> gen, std::string id)
    : family_(family), gf_(std::move(gf)), n_(n), k_(k), d_(d),
      gen_(std::move(gen)), id_(std::move(id)) {
  if (static_cast<long long>(k_bits()) <= 16) {
    image_d_ = {min_distance_exhaustive(), true};
  } else {
    image_d_ = {d_, false};
  }
}

BlockCode BlockCode::bch(int m, int expected_k, int d_design) {
  GaloisField gf(m);
  const int n = gf.order() - 1;
  if (d_design < 2 || d_design > n) throw std::invalid_argument("designed distance out of range");
  std::vector<bool> covered(n, false);
  std::vector<int> gen{1};
  for (int e = 1; e <= d_design - 1; ++e) {
    if (covered[e]) continue;
    std::vector<int> minimal{1};
    for (int c : coset_of(e, n)) {
      covered[c] = true;
      const std::vector<int> factor{gf.pow_alpha(c), 1};  // x - alpha^c
      minimal = gf_poly_mul(gf, minimal, factor);
    }
    gen = gf_poly_mul(gf, gen, minimal);
  }
  for (int c : gen)
    if (c > 1) throw std::invalid_argument("BCH generator fell outside GF(2)");
  const int k = n - static_cast<int>(gf_poly_degree(gen));
  if (k != expected_k) throw std::invalid_argument("BCH parameters do not yield requested k");
  const CodeFamily fam = (d_design == 3 && k == n - m) ? CodeFamily::kHamming : CodeFamily::kBch;
  return BlockCode(fam, std::move(gf), n, k, d_design, std::move(gen),
                   (fam == CodeFamily::kHamming ? "hamming_" : "bch_") + std::to_string(n) +
                       "_" + std::to_string(k));
}

BlockCode BlockCode::rs(int m, int k_sym) {
  GaloisField gf(m);
  const int n = gf.order() - 1;
  if (k_sym < 1 || k_sym >= n) throw std::invalid_argument("RS dimension out of range");
  const int d = n - k_sym + 1;
  std::vector<int> gen{1};
  for (int j = 1; j <= d - 1; ++j) {
    const std::vector<int> factor{gf.pow_alpha(j), 1};  // x - alpha^j
    gen = gf_poly_mul(gf, gen, factor);
  }
  return BlockCode(CodeFamily::kRs, std::move(gf), n, k_sym, d, std::move(gen),
                   "rs_" + std::to_string(n) + "_" + std::to_string(k_sym));
}

BlockCode BlockCode::from_id(std::string_view id) {
  if (id == "hamming_7_4") return bch(3, 4, 3);
  if (id == "bch_15_7") return bch(4, 7, 5);
  if (id == "bch_31_21") return bch(5, 21, 5);
  if (id == "bch_63_45") return bch(6, 45, 7);
  if (id == "rs_15_11") return rs(4, 11);
  if (id == "rs_15_9") return rs(4, 9);
  throw std::invalid_argument("unknown code id: " + std::string(id));
}

const std::vector<std::string>& BlockCode::catalog() {
  static const std::vector<std::string> ids{"hamming_7_4", "bch_15_7", "bch_31_21",
                                            "bch_63_45",   "rs_15_11", "rs_15_9"};
  return ids;
}

std::vector<int> BlockCode::encode(std::span<const int> message) const {
  if (static_cast<int>(message.size()) != k_)
    throw std::invalid_argument("message length must be k");
  const int symbol_cap = family_ == CodeFamily::kRs ? gf_.order() : 2;
  for (int s : message)
    if (s < 0 || s >= symbol_cap) throw std::invalid_argument("message symbol out of range");
  // c(x) = M(x) x^{n-k} + (M(x) x^{n-k} mod g(x)): message sits in the top
  // k coefficients, parity in the bottom n-k
  std::vector<int> word(n_, 0);
  std::copy(message.begin(), message.end(), word.begin() + (n_ - k_));
  const std::vector<int> rem = gf_poly_mod(gf_, word, gen_);
  for (std::size_t i = 0; i < rem.size(); ++i) word[i] = rem[i];
  return word;
}

std::vector<int> BlockCode::syndromes(std::span<const int> word) const {
  if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length must be n");
  std::vector<int> s(d_ - 1, 0);
  for (int j = 1; j <= d_ - 1; ++j) s[j - 1] = gf_poly_eval(gf_, word, gf_.pow_alpha(j));
  return s;
}

bool BlockCode::is_codeword(std::span<const int> word) const {
  const std::vector<int> s = syndromes(word);
  return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
}

HardDecodeOutcome BlockCode::decode_bdd(std::span<const int> received,
                                        std::span<const int> erasures) const {
  if (static_cast<int>(received.size()) != n_)
    throw std::invalid_argument("received length must be n");
  if (static_cast<int>(erasures.size()) > d_ - 1)
    throw std::domain_error("erasure set exceeds d_design - 1");
  std::vector<bool> erased(n_, false);
  for (int pos : erasures) {
    if (pos < 0 || pos >= n_) throw std::domain_error("erasure position out of range");
    if (erased[pos]) throw std::domain_error("duplicate erasure position");
    erased[pos] = true;
  }
  const int symbol_cap = family_ == CodeFamily::kRs ? gf_.order() : 2;
  for (int s : received)
    if (s < 0 || s >= symbol_cap) throw std::invalid_argument("received symbol out of range");

  HardDecodeOutcome fail;
  fail.codeword.assign(received.begin(), received.end());

  // erased coordinates enter as zeros; their solved "error" magnitudes are
  // the coordinates themselves
  std::vector<int> work(received.begin(), received.end());
  for (int pos = 0; pos < n_; ++pos)
    if (erased[pos]) work[pos] = 0;

  const std::vector<int> synd = syndromes(work);
  const int no_eras = static_cast<int>(erasures.size());

  // erasure locator Gamma(x) = prod (1 - X_i x)
  std::vector<int> lambda(d_, 0);
  lambda[0] = 1;
  for (int pos : erasures) {
    const int x_i = gf_.pow_alpha(pos);
    for (int i = std::min(no_eras, d_ - 1); i >= 1; --i)
      lambda[i] ^= gf_.mul(x_i, lambda[i - 1]);
  }

  // Berlekamp-Massey seeded with the erasure locator (Karn's formulation):
  // iterations resume at r = no_eras + 1 and the length test carries the
  // erasure offset
  std::vector<int> bpoly = lambda;
  int el = no_eras;
  for (int r = no_eras + 1; r <= d_ - 1; ++r) {
    int discr = 0;
    for (int i = 0; i < r; ++i)
      if (lambda[i] != 0) discr ^= gf_.mul(lambda[i], synd[r - i - 1]);
    if (discr == 0) {
      bpoly = shift_up(bpoly);
      continue;
    }
    std::vector<int> t(d_, 0);
    t[0] = lambda[0];
    for (int i = 0; i + 1 < d_; ++i) t[i + 1] = lambda[i + 1] ^ gf_.mul(discr, bpoly[i]);
    if (2 * el <= r + no_eras - 1) {
      el = r + no_eras - el;
      for (int i = 0; i < d_; ++i) bpoly[i] = gf_.div(lambda[i], discr);
    } else {
      bpoly = shift_up(bpoly);
    }
    lambda = t;
  }

  const long long deg = gf_poly_degree(lambda);
  if (deg < 0) return fail;

  // Chien search: position i is located iff lambda(alpha^{-i}) = 0
  std::vector<int> roots_pos;
  for (int pos = 0; pos < n_; ++pos)
    if (gf_poly_eval(gf_, lambda, gf_.pow_alpha(-pos)) == 0) roots_pos.push_back(pos);
  if (static_cast<long long>(roots_pos.size()) != deg) return fail;

  // Forney: Omega = S(x) Lambda(x) mod x^{d-1}; magnitude at X_l^{-1} is
  // Omega(X_l^{-1}) / Lambda'(X_l^{-1}) (char 2, first syndrome exponent 1)
  std::vector<int> omega(d_ - 1, 0);
  for (int i = 0; i < d_ - 1; ++i) {
    if (synd[i] == 0) continue;
    for (int j = 0; j <= static_cast<int>(deg) && i + j < d_ - 1; ++j)
      omega[i + j] ^= gf_.mul(synd[i], lambda[j]);
  }

  std::vector<int> corrected = work;
  int changed_unerased = 0;
  for (int pos : roots_pos) {
    const int x_inv = gf_.pow_alpha(-pos);
    int deriv = 0;  // Lambda'(x) keeps odd-degree terms only in char 2
    for (int i = 1; i <= static_cast<int>(deg); i += 2)
      deriv ^= gf_.mul(lambda[i], gf_.pow_alpha(-pos * static_cast<long long>(i - 1)));
    if (deriv == 0) return fail;
    const int magnitude = gf_.div(gf_poly_eval(gf_, omega, x_inv), deriv);
    if (family_ != CodeFamily::kRs && magnitude > 1) return fail;
    if (!erased[pos] && magnitude == 0) return fail;
    corrected[pos] ^= magnitude;
    if (!erased[pos] && magnitude != 0) ++changed_unerased;
  }
  // strict bounded-distance semantics: reject lucky corrections beyond
  // 2e + s <= d - 1 so the closed-form >t oracle stays exact
  if (2 * changed_unerased + no_eras > d_ - 1) return fail;
  if (!is_codeword(corrected)) return fail;

  HardDecodeOutcome out;
  out.kind = HardDecodeOutcome::Kind::kCorrected;
  out.codeword = std::move(corrected);
  out.symbol_errors = changed_unerased;
  return out;
}

std::vector<std::uint8_t> BlockCode::to_bits(std::span<const int> symbols) const {
  const int bps = bits_per_symbol();
  std::vector<std::uint8_t> bits(symbols.size() * bps);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (int b = 0; b < bps; ++b) bits[i * bps + b] = (symbols[i] >> b) & 1;
  return bits;
}

std::vector<int> BlockCode::from_bits(std::span<const std::uint8_t> bits) const {
  const int bps = bits_per_symbol();
  if (bits.size() % bps != 0) throw std::invalid_argument("bit length not a symbol multiple");
  std::vector<int> symbols(bits.size() / bps, 0);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (int b = 0; b < bps; ++b) symbols[i] |= static_cast<int>(bits[i * bps + b] & 1) << b;
  return symbols;
}

int BlockCode::min_distance_exhaustive() const {
  const int kb = k_bits();
  if (kb > 20) throw std::domain_error("dimension too large for exhaustive enumeration");
  int best = std::numeric_limits<int>::max();
  std::vector<std::uint8_t> mbits(kb, 0);
  for (std::uint32_t msg = 1; msg < (1u << kb); ++msg) {
    for (int b = 0; b < kb; ++b) mbits[b] = (msg >> b) & 1;
    const std::vector<int> cw = encode(from_bits(mbits));
    const std::vector<std::uint8_t> cbits = to_bits(cw);
    int w = 0;
    for (std::uint8_t bit : cbits) w += bit;
    if (w > 0 && w < best) best = w;
  }
  return best;
}

}  // namespace critpoint
