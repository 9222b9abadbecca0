#include <cmath>
#include <stdexcept>

#include "critpoint/critical.hpp"
#include "critpoint/errors.hpp"

namespace critpoint {

SnrPoint critical_snr(const CodeParams& params) {
  if (params.d >= params.n) throw std::domain_error("critical point requires d < n");
  const double ratio = static_cast<double>(params.n) / static_cast<double>(params.d) - 1.0;
  return SnrPoint::from_linear(std::log(ratio) / params.rate());
}

double critical_wer(double n, double rate, double d) {
  if (!(n > 0.0) || !(d > 0.0) || !(d < n)) throw std::domain_error("need 0 < d < n");
  if (!(rate > 0.0) || !(rate < 1.0)) throw std::domain_error("rate in (0,1)");
  // log10 P = -n (1 - R - H(d/n)) log10(2) + d log10(d / (n - d))
  return -n * (1.0 - rate - binary_entropy(d / n).bits) * std::log10(2.0) +
         d * (std::log10(d) - std::log10(n - d));
}

double critical_wer(const CodeParams& params) {
  return critical_wer(static_cast<double>(params.n), params.rate(),
                      static_cast<double>(params.d));
}

CriticalPoint critical_point(const CodeParams& params) {
  const SnrPoint snr = critical_snr(params);
  // sanity: at the critical SNR the union-bound exponent is maximized by
  // weight d itself, i.e. n / (exp(R ebn0) + 1) == d. Only checkable on the
  // physical domain; d > n/2 puts the critical point at ebn0 <= 0, where the
  // closed form is still reported but the weight function is not defined.
  if (snr.linear() >= 0.0) {
    const double dom = dominant_weight(params, snr);
    if (!(std::abs(dom - static_cast<double>(params.d)) <=
          1e-9 * static_cast<double>(params.d)))
      throw numerical_error("critical point self-check failed");
  }
  CriticalPoint cp;
  cp.ebn0_linear = snr.linear();
  cp.db_defined = snr.db_defined();
  cp.ebn0_db = snr.db();
  cp.log10_wer = critical_wer(params);
  return cp;
}

CriticalPoint gv_critical(long long n, double rate) {
  if (n <= 0) throw std::domain_error("n must be positive");
  if (!(rate > 0.0) || !(rate < 1.0)) throw std::domain_error("rate in (0,1)");
  // With d/n at the GV relative distance H^{-1}(1 - R) the 2^{-n(1-R-H)}
  // factor is exactly 1 and both coordinates close in p* alone.
  const double p = inverse_binary_entropy(1.0 - rate);
  if (!(p > 0.0) || !(p < 0.5)) throw numerical_error("gv relative distance out of range");
  CriticalPoint cp;
  cp.ebn0_linear = std::log(1.0 / p - 1.0) / rate;
  cp.db_defined = cp.ebn0_linear > 0.0;
  cp.ebn0_db = cp.db_defined ? 10.0 * std::log10(cp.ebn0_linear)
                             : std::numeric_limits<double>::quiet_NaN();
  cp.log10_wer = static_cast<double>(n) * p * (std::log10(p) - std::log10(1.0 - p));
  return cp;
}

}  // namespace critpoint
