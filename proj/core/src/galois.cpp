#include <stdexcept>

#include "critpoint/galois.hpp"

namespace critpoint {

unsigned GaloisField::default_poly(int m) {
  // degree-m primitive polynomials, lowest-weight textbook choices
  static constexpr unsigned kPoly[9] = {
      0,
      0b11,         // x + 1
      0b111,        // x^2 + x + 1
      0b1011,       // x^3 + x + 1
      0b10011,      // x^4 + x + 1
      0b100101,     // x^5 + x^2 + 1
      0b1000011,    // x^6 + x + 1
      0b10001001,   // x^7 + x^3 + 1
      0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
  };
  if (m < 1 || m > 8) throw std::invalid_argument("field degree m must be in [1, 8]");
  return kPoly[m];
}

GaloisField::GaloisField(int m) : GaloisField(m, default_poly(m)) {}

GaloisField::GaloisField(int m, unsigned poly) : m_(m), poly_(poly) {
  if (m < 1 || m > 8) throw std::invalid_argument("field degree m must be in [1, 8]");
  q_ = 1 << m;
  if (poly < static_cast<unsigned>(q_) || poly >= static_cast<unsigned>(2 * q_))
    throw std::invalid_argument("polynomial does not have degree m");
  log_.assign(q_, 0);
  alog_.assign(2 * (q_ - 1), 0);
  int x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    if (i > 0 && x == 1) throw std::invalid_argument("polynomial is not primitive");
    alog_[i] = x;
    alog_[i + q_ - 1] = x;
    log_[x] = i;
    x <<= 1;
    if (x & q_) x ^= static_cast<int>(poly);
  }
  if (x != 1) throw std::invalid_argument("polynomial is not primitive");
}

int GaloisField::div(int a, int b) const {
  if (b == 0) throw std::domain_error("division by zero field element");
  if (a == 0) return 0;
  return alog_[log_[a] - log_[b] + q_ - 1];
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("zero field element has no inverse");
  return alog_[q_ - 1 - log_[a]];
}

int GaloisField::pow_alpha(long long e) const {
  const int n = q_ - 1;
  int r = static_cast<int>(e % n);
  if (r < 0) r += n;
  return alog_[r];
}

int GaloisField::log_alpha(int a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  return log_[a];
}

namespace {
void trim(std::vector<int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

std::vector<int> gf_poly_mul(const GaloisField& gf, std::span<const int> a,
                             std::span<const int> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] ^= gf.mul(a[i], b[j]);
  }
  trim(out);
  return out;
}

std::vector<int> gf_poly_mod(const GaloisField& gf, std::span<const int> a,
                             std::span<const int> b) {
  std::vector<int> r(a.begin(), a.end());
  trim(r);
  const long long db = gf_poly_degree(b);
  if (db < 0) throw std::domain_error("polynomial modulus is zero");
  const int lead_inv = gf.inv(b[static_cast<std::size_t>(db)]);
  while (gf_poly_degree(r) >= db) {
    const std::size_t dr = r.size() - 1;
    const int factor = gf.mul(r[dr], lead_inv);
    const std::size_t shift = dr - static_cast<std::size_t>(db);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j)
      r[shift + j] ^= gf.mul(factor, b[j]);
    trim(r);
  }
  return r;
}

int gf_poly_eval(const GaloisField& gf, std::span<const int> p, int x) {
  int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = gf.mul(acc, x) ^ p[i];
  return acc;
}

long long gf_poly_degree(std::span<const int> p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<long long>(i);
  return -1;
}

}  // namespace critpoint
