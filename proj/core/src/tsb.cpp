#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "critpoint/bounds.hpp"
#include "critpoint/errors.hpp"

namespace critpoint {
namespace {

// Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGl6X[6] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                             0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
constexpr double kGl6W[6] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                             0.4679139345726910, 0.3607615730481386, 0.1713244923791704};
constexpr double kGl8X[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                             -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                             0.7966664774136267,  0.9602898564975363};
constexpr double kGl8W[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

constexpr double kLnSqrt2Pi = 0.9189385332046727;  // ln sqrt(2 pi)

double ln_std_normal(double t) { return -0.5 * t * t - kLnSqrt2Pi; }

}  // namespace

TsbBound::TsbBound(const LogWeightSpectrum& spectrum, const CodeParams& params)
    : spectrum_(spectrum), params_(params) {
  if (spectrum.n != params.n) throw std::invalid_argument("spectrum and code params disagree on n");
  spectrum_.validate();

  // Geometry factors b_w = sqrt(w/(n-w)) exist only for w < n; the antipodal
  // weight (w = n) never intersects the cone and is covered by the tail term.
  std::vector<double> ln_a_all, b_all;
  for (long long w = spectrum_.d_min; w <= std::min(spectrum_.n - 1, spectrum_.n); ++w) {
    const double ln_a = spectrum_.ln_coeff(w);
    if (ln_a == kNegInf) continue;
    ln_a_all.push_back(ln_a);
    b_all.push_back(std::sqrt(static_cast<double>(w) / static_cast<double>(spectrum_.n - w)));
  }
  if (b_all.empty() || spectrum_.n < 3) {
    degraded_ = true;
    return;
  }

  const double a2 = 0.5 * static_cast<double>(spectrum_.n - 2);
  // Stationarity condition of the bound in the cone slope c = tan(theta):
  //   sum_w A_w I_{1 - (b_w/c)^2}((n-2)/2, 1/2) = 2
  // (the regularized incomplete beta is the spherical-cap area fraction of
  // the half-angle arccos(b_w/c)). The left side is increasing in c.
  auto lhs = [&](double c) {
    std::vector<double> terms;
    terms.reserve(b_all.size());
    for (std::size_t j = 0; j < b_all.size(); ++j) {
      if (b_all[j] >= c) break;  // b ascending
      const double x = 1.0 - (b_all[j] / c) * (b_all[j] / c);
      if (x <= 0.0) continue;
      terms.push_back(ln_a_all[j] + ln_beta_inc_reg(a2, 0.5, x));
    }
    return terms.empty() ? kNegInf : log_sum_exp(terms);
  };

  double lo = b_all.front();
  double hi = std::max(2.0 * b_all.front(), 1.0);
  bool bracketed = false;
  for (int it = 0; it < 80; ++it) {
    if (lhs(hi) >= std::numbers::ln2) {
      bracketed = true;
      break;
    }
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) break;
  }
  if (!bracketed) {
    degraded_ = true;  // total pairwise mass below 2: no stationary cone
    return;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < std::numbers::ln2 ? lo : hi) = mid;
  }
  cone_slope_ = 0.5 * (lo + hi);

  for (std::size_t j = 0; j < b_all.size(); ++j) {
    if (b_all[j] >= cone_slope_) break;
    b_.push_back(b_all[j]);
    const double ln_a = ln_a_all[j];
    ln_prefix_.push_back(ln_prefix_.empty() ? ln_a : log_sum_exp(ln_prefix_.back(), ln_a));
  }
  ln_suffix_.assign(b_.size(), kNegInf);
  double acc = kNegInf;
  for (std::size_t j = b_.size(); j-- > 0;) {
    acc = log_sum_exp(acc, ln_a_all[j]);
    ln_suffix_[j] = acc;
  }
}

// ln of sum_w A_w * integral_{beta_w}^{r} phi_sigma(z2) P[chi2_{n-2} <=
// (r^2 - z2^2)/sigma^2] dz2, for the cross-section at axial distance h from
// the apex (beta_w = h b_w, r = h c*). Collapsed to one left-to-right
// composite quadrature of phi * gamma * C(z2) where C is the log-prefix mass
// of weights with beta_w <= z2 (piecewise constant, exact at each node).
// Panels are cut at the beta knots so C never jumps inside one, and their
// width tracks the local log-slope of the smooth factor, which is dominated
// by the chi-square cdf deep in its left tail: |d ln/dz2| ~ (z2/sigma^2) *
// max(1, a2/y). The smooth factor decreases monotonically in z2, so
// ln_point(x) + ln(total mass) + ln(r - x) bounds everything right of x; once
// that drops `tol` nats below the accumulated sum (or below ln_cut, the
// caller's other additive term), the loop stops rigorously.
double TsbBound::inner_ln(double h, double r, double sigma, double ln_cut, double tol) const {
  const double a2 = 0.5 * static_cast<double>(spectrum_.n - 2);
  const double sigma2 = sigma * sigma;
  const double inv2s2 = 1.0 / (2.0 * sigma2);
  const double ln_norm = -std::log(sigma) - kLnSqrt2Pi;
  const std::size_t nw = b_.size();

  std::vector<double> beta(nw);
  for (std::size_t j = 0; j < nw; ++j) beta[j] = h * b_[j];
  if (!(beta[0] < r)) return kNegInf;

  auto ln_point = [&](double z2) {
    return ln_norm - z2 * z2 * inv2s2 +
           ln_gamma_lower_reg(a2, std::max(0.0, (r * r - z2 * z2) * inv2s2));
  };
  auto width_at = [&](double z2) {
    const double y = std::max((r * r - z2 * z2) * inv2s2, 1e-12);
    const double slope = (std::max(z2, 0.05 * sigma) / sigma2) * std::max(1.0, a2 / y);
    return std::clamp(2.0 / slope, 1e-3 * sigma, 0.5 * sigma);
  };
  const double ln_total_mass = ln_prefix_.back();

  double running = kNegInf;
  double x = beta[0];
  std::size_t kidx = 1;  // first knot strictly right of x
  while (x < r) {
    const double rest = ln_point(x) + ln_total_mass + std::log(r - x);
    if (rest < running - tol || rest < ln_cut - tol) break;
    const double w = width_at(x);
    double x1 = std::min(x + w, r);
    while (kidx < nw && beta[kidx] <= x) ++kidx;
    if (kidx < nw && beta[kidx] < x1) x1 = beta[kidx];
    const double half = 0.5 * (x1 - x);
    const double mid = x + half;
    const double ln_c = ln_prefix_[kidx - 1];  // constant across this panel
    if (x1 - x < 0.25 * w) {
      for (int g = 0; g < 2; ++g) {
        const double z2 = mid + half * (g == 0 ? -0.5773502691896257 : 0.5773502691896257);
        running = log_sum_exp(running, std::log(half) + ln_point(z2) + ln_c);
      }
    } else {
      for (int g = 0; g < 6; ++g) {
        const double z2 = mid + half * kGl6X[g];
        running = log_sum_exp(running, std::log(kGl6W[g] * half) + ln_point(z2) + ln_c);
      }
    }
    x = x1;
  }
  return running;
}

BoundValue TsbBound::evaluate(const SnrPoint& snr) const {
  if (!(snr.linear() > 0.0)) throw std::domain_error("ebn0 must be positive");
  const BoundValue ub = union_bound(spectrum_, params_, snr);
  if (degraded_) {
    BoundValue v = ub;
    v.degraded = true;
    return v;
  }

  const double n = static_cast<double>(spectrum_.n);
  const double sigma = std::sqrt(1.0 / (2.0 * params_.rate() * snr.linear()));
  const double sqn = std::sqrt(n);
  const double t_top = sqn / sigma;
  const double a_tail = 0.5 * (n - 1.0);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);

  // log of the radial integrand at z1 = sigma t: phi(t) * [ sum_w ... + tail ]
  auto ln_integrand = [&](double t, double tol) {
    const double h = sqn - sigma * t;
    const double r = h * cone_slope_;
    const double ln_tail = ln_gamma_upper_reg(a_tail, r * r * inv2s2);
    const double ln_wsum = inner_ln(h, r, sigma, ln_tail, tol);
    return ln_std_normal(t) + log_sum_exp(ln_wsum, ln_tail);
  };

  // coarse scan for the peak (cheap inner tolerance), then panel refinement
  // of the window holding everything within 45 nats of it
  const double t_lo = -30.0;
  const int n_scan = 240;
  const double scan_step = (t_top - t_lo) / (n_scan - 1);
  std::vector<double> scan(n_scan);
  int peak = 0;
  for (int i = 0; i < n_scan; ++i) {
    scan[i] = ln_integrand(t_lo + i * scan_step, 16.0);
    if (scan[i] > scan[peak]) peak = i;
  }
  int w_lo = peak, w_hi = peak;
  while (w_lo > 0 && scan[w_lo - 1] > scan[peak] - 45.0) --w_lo;
  while (w_hi < n_scan - 1 && scan[w_hi + 1] > scan[peak] - 45.0) ++w_hi;
  const double a = t_lo + std::max(0, w_lo - 1) * scan_step;
  const double b = t_lo + std::min(n_scan - 1, w_hi + 1) * scan_step;

  const int panels = std::max(24, static_cast<int>(std::ceil((b - a) / 0.4)));
  const double pw = (b - a) / panels;
  double quad = kNegInf;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * pw;
    const double half = 0.5 * pw;
    for (int g = 0; g < 8; ++g) {
      const double t = mid + half * kGl8X[g];
      quad = log_sum_exp(quad, std::log(kGl8W[g] * half) + ln_integrand(t, 46.0));
    }
  }

  // the z1 >= sqrt(n) mass (past the apex, fully outside the cone) is Q(t_top)
  double raw = log_sum_exp(quad, ln_q(t_top));

  // TSB(optimal cone) <= TSB(cone -> infinity) = UB; the min of two valid
  // upper bounds is itself a bound, which also absorbs quadrature noise.
  BoundValue v;
  v.p.value = std::min(raw, ub.p.value);
  if (v.p.value >= 0.0) {
    v.p.value = 0.0;
    v.vacuous = true;
  }
  return v;
}

BoundValue tangential_sphere_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                                   const SnrPoint& snr) {
  return TsbBound(spectrum, params).evaluate(snr);
}

}  // namespace critpoint
