#pragma once

#include <span>
#include <string>
#include <vector>

#include "critpoint/logmath.hpp"
#include "critpoint/spectrum.hpp"

namespace critpoint {

// Eb/N0 operating point. Stored as the linear ratio; dB is derived. Values
// <= 0 can arise from the critical-point formula when d > n/2 and are kept
// as-is with db() undefined (NaN), flagged by db_defined().
class SnrPoint {
 public:
  static SnrPoint from_db(double db);
  static SnrPoint from_linear(double linear);

  double linear() const { return linear_; }
  bool db_defined() const { return linear_ > 0.0; }
  double db() const;  // NaN when !db_defined()

 private:
  explicit SnrPoint(double linear) : linear_(linear) {}
  double linear_ = 0.0;
};

// A bound evaluation. Values above ln 1 are clamped to 0 and flagged vacuous
// rather than reported raw; degraded marks a TSB fallback to the union bound.
struct BoundValue {
  LogProb p;
  bool vacuous = false;
  bool degraded = false;
};

enum class BoundMethod { union_bound, first_term, max_term, tsb };

const char* bound_method_id(BoundMethod m);           // "ub", "first", "approx", "tsb"
BoundMethod bound_method_from_id(const std::string& id);

// Union bound over the spectrum: ln sum_w A_w Q(sqrt(2 R w ebn0)).
BoundValue union_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                       const SnrPoint& snr);

// Leading term A_dmin Q(sqrt(2 R dmin ebn0)); always <= union_bound.
BoundValue first_term_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                            const SnrPoint& snr);

// log2 f(i) = -n(1 - R - H(i/n)) - R i ebn0 log2 e, for real i in (0, n).
double f_eval(const CodeParams& params, double i, const SnrPoint& snr);

// Real-valued maximizer n / (e^(R ebn0) + 1) of f; requires ebn0 >= 0.
double dominant_weight(const CodeParams& params, const SnrPoint& snr);

// Max-term approximation: ln of max f(i) over the integer neighbors of the
// dominant weight clamped to [d, n-1]. include_prefactor adds the
// (4 pi R i ebn0)^(-1/2) factor for sensitivity studies.
BoundValue max_term_approx(const CodeParams& params, const SnrPoint& snr,
                           bool include_prefactor = false);

// Tangential-sphere bound. The cone half-angle is SNR independent: it solves
// sum_w A_w I_{sin^2 theta_w}((n-2)/2, 1/2) = 2 (the stationarity condition
// of the bound), found once per spectrum by bracketed bisection. evaluate()
// integrates the in-cone pairwise terms plus the out-of-cone chi-square tail
// in the log domain. If no cone solves the equation (tiny spectra), the bound
// degrades to the union bound with the degraded flag set.
class TsbBound {
 public:
  TsbBound(const LogWeightSpectrum& spectrum, const CodeParams& params);

  bool degraded() const { return degraded_; }
  double cone_slope() const { return cone_slope_; }  // tan(theta*)
  BoundValue evaluate(const SnrPoint& snr) const;

 private:
  double inner_ln(double h, double r, double sigma, double ln_cut, double tol) const;

  LogWeightSpectrum spectrum_;
  CodeParams params_;
  bool degraded_ = false;
  double cone_slope_ = 0.0;
  // weights with b_w = sqrt(w / (n - w)) < cone slope, ascending
  std::vector<double> b_;
  std::vector<double> ln_prefix_;  // ln sum A up to each weight
  std::vector<double> ln_suffix_;  // ln sum A from each weight on
};

BoundValue tangential_sphere_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                                   const SnrPoint& snr);

struct BoundCurvePoint {
  double ebno_db = 0.0;
  double log10_wer = 0.0;
  bool vacuous = false;
  bool degraded = false;
};

// One method swept over a grid. note records the spectrum truncation.
struct BoundCurve {
  std::string label;
  std::string note;
  std::vector<BoundCurvePoint> points;
};

struct SweepOptions {
  bool include_prefactor = false;
  unsigned max_workers = 0;  // 0 = hardware concurrency
};

// Evaluates one method over an increasing dB grid. Monotone non-increase of
// log10_wer is enforced (numerical_error on violation); per-point failures
// are rethrown with the grid index attached.
BoundCurve sweep(BoundMethod method, const LogWeightSpectrum& spectrum, const CodeParams& params,
                 std::span<const SnrPoint> grid, const SweepOptions& options = {});

}  // namespace critpoint
