#pragma once

#include <limits>
#include <span>

namespace critpoint {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Natural-log probability. -inf is first class and encodes an exactly-zero
// probability; value must never exceed 0 for a true probability.
struct LogProb {
  double value = kNegInf;

  bool is_zero() const { return value == kNegInf; }
  double log10() const;
};

// Binary entropy in bits. H(0) = H(1) = 0, maximum 1 at p = 1/2.
struct EntropyValue {
  double bits = 0.0;
};

// ln C(n, i) via lgamma; exact 0 for i == 0 and i == n. Throws
// std::domain_error unless 0 <= i <= n.
double ln_binomial(long long n, long long i);

// H(p) for p in [0, 1]; symmetric in p <-> 1-p by construction.
EntropyValue binary_entropy(double p);

// Increasing branch of the inverse: returns p in [0, 1/2] with H(p) = y,
// |H(p) - y| <= 1e-12. Bisection; y outside [0, 1] throws std::domain_error.
double inverse_binary_entropy(double y);

// ln Q(x), Q the Gaussian tail. erfc path below x = 8, Mills-ratio continued
// fraction above (Q underflows double near x = 38, the log value does not).
double ln_q(double x);

// max + ln sum exp(v - max); empty input throws, all -inf yields -inf.
double log_sum_exp(std::span<const double> values);
double log_sum_exp(double a, double b);

// Regularized incomplete gamma and beta in the natural-log domain. These sit
// far below double underflow in the bound evaluations (chi-square tails and
// sphere-cap areas in thousands of dimensions), hence the log-domain forms.
double ln_gamma_lower_reg(double a, double x);  // ln P(a, x)
double ln_gamma_upper_reg(double a, double x);  // ln Q(a, x)
double ln_beta_inc_reg(double a, double b, double x);  // ln I_x(a, b)

}  // namespace critpoint
