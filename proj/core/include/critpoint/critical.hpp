#pragma once

#include "critpoint/bounds.hpp"
#include "critpoint/spectrum.hpp"

namespace critpoint {

// The SNR at which the minimum-distance term takes over as the largest term
// of the random-like union bound, and the word error rate there.
struct CriticalPoint {
  double ebn0_linear = 0.0;
  double ebn0_db = 0.0;      // NaN when !db_defined
  bool db_defined = false;
  double log10_wer = 0.0;
};

// (1/R) ln(n/d - 1). Requires d < n; the result can be <= 0 when d > n/2 and
// is returned as-is with the dB form undefined.
SnrPoint critical_snr(const CodeParams& params);

// log10 of 2^(-n(1 - R - H(d/n))) (d/(n-d))^d. The real-valued overload is
// shared with the GV specialization, where d need not be an integer.
double critical_wer(const CodeParams& params);
double critical_wer(double n, double rate, double d);

// Bundles critical_snr and critical_wer and verifies the internal identity
// dominant_weight(critical_snr) == d to 1e-9 relative (numerical_error if not).
CriticalPoint critical_point(const CodeParams& params);

// Gilbert-Varshamov specialization: d* = n Hinv(1 - R) (real-valued), where
// the 2^(-n(1-R-H(d/n))) factor collapses to 1 exactly.
CriticalPoint gv_critical(long long n, double rate);

}  // namespace critpoint
