#pragma once

#include <span>
#include <vector>

namespace critpoint {

// GF(2^m) arithmetic over a fixed primitive polynomial, m in [1, 8].
// Elements are integers in [0, 2^m); addition is XOR; multiplication runs on
// log/antilog tables built at construction. Construction verifies primitivity
// by checking that x generates a cycle of length exactly 2^m - 1.
class GaloisField {
 public:
  explicit GaloisField(int m);           // default primitive polynomial
  GaloisField(int m, unsigned poly);     // explicit polynomial, validated

  int m() const { return m_; }
  int order() const { return q_; }       // 2^m
  unsigned poly() const { return poly_; }

  int add(int a, int b) const { return a ^ b; }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return alog_[log_[a] + log_[b]];
  }
  int div(int a, int b) const;
  int inv(int a) const;
  int pow_alpha(long long e) const;      // alpha^e, any integer exponent
  int log_alpha(int a) const;            // discrete log base alpha, a != 0

  static unsigned default_poly(int m);

 private:
  int m_ = 0;
  int q_ = 0;
  unsigned poly_ = 0;
  std::vector<int> log_;    // index by element value, defined for value != 0
  std::vector<int> alog_;   // index by exponent, doubled to skip a mod
};

// Dense polynomial helpers over GF(2^m); coefficient of x^i at index i.
// Results are trimmed of leading zeros (the zero polynomial is {}).
std::vector<int> gf_poly_mul(const GaloisField& gf, std::span<const int> a,
                             std::span<const int> b);
std::vector<int> gf_poly_mod(const GaloisField& gf, std::span<const int> a,
                             std::span<const int> b);
int gf_poly_eval(const GaloisField& gf, std::span<const int> p, int x);
long long gf_poly_degree(std::span<const int> p);  // -1 for zero polynomial

}  // namespace critpoint
