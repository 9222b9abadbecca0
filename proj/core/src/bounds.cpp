#include "critpoint/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "critpoint/detail/parallel.hpp"
#include "critpoint/errors.hpp"

namespace critpoint {

SnrPoint SnrPoint::from_db(double db) { return SnrPoint(std::pow(10.0, db / 10.0)); }

SnrPoint SnrPoint::from_linear(double linear) { return SnrPoint(linear); }

double SnrPoint::db() const {
  if (!db_defined()) return std::numeric_limits<double>::quiet_NaN();
  return 10.0 * std::log10(linear_);
}

const char* bound_method_id(BoundMethod m) {
  switch (m) {
    case BoundMethod::union_bound: return "ub";
    case BoundMethod::first_term: return "first";
    case BoundMethod::max_term: return "approx";
    case BoundMethod::tsb: return "tsb";
  }
  return "?";
}

BoundMethod bound_method_from_id(const std::string& id) {
  if (id == "ub") return BoundMethod::union_bound;
  if (id == "first") return BoundMethod::first_term;
  if (id == "approx") return BoundMethod::max_term;
  if (id == "tsb") return BoundMethod::tsb;
  throw std::invalid_argument("unknown bound method '" + id + "'");
}

namespace {

void check_pairing(const LogWeightSpectrum& spectrum, const CodeParams& params) {
  if (spectrum.n != params.n)
    throw std::invalid_argument("spectrum and code params disagree on n");
}

void check_snr_positive(const SnrPoint& snr) {
  if (!(snr.linear() > 0.0)) throw std::domain_error("ebn0 must be positive");
}

BoundValue clamp_to_probability(double ln_value) {
  BoundValue b;
  if (ln_value > 0.0) {
    b.p.value = 0.0;
    b.vacuous = true;
  } else {
    b.p.value = ln_value;
  }
  return b;
}

}  // namespace

BoundValue union_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                       const SnrPoint& snr) {
  check_pairing(spectrum, params);
  check_snr_positive(snr);
  spectrum.validate();
  const double r2 = 2.0 * params.rate() * snr.linear();
  std::vector<double> terms;
  terms.reserve(spectrum.ln_coeffs.size());
  for (long long w = spectrum.d_min; w <= spectrum.n; ++w) {
    const double ln_a = spectrum.ln_coeff(w);
    if (ln_a == kNegInf) continue;
    terms.push_back(ln_a + ln_q(std::sqrt(r2 * static_cast<double>(w))));
  }
  if (terms.empty()) return BoundValue{};  // exactly-zero spectrum
  return clamp_to_probability(log_sum_exp(terms));
}

BoundValue first_term_bound(const LogWeightSpectrum& spectrum, const CodeParams& params,
                            const SnrPoint& snr) {
  check_pairing(spectrum, params);
  check_snr_positive(snr);
  const double ln_a = spectrum.ln_coeff(spectrum.d_min);
  if (ln_a == kNegInf) return BoundValue{};
  const double arg = std::sqrt(2.0 * params.rate() * snr.linear() * static_cast<double>(spectrum.d_min));
  return clamp_to_probability(ln_a + ln_q(arg));
}

double f_eval(const CodeParams& params, double i, const SnrPoint& snr) {
  const double n = static_cast<double>(params.n);
  if (!(i > 0.0 && i < n)) throw std::domain_error("f_eval: i outside (0, n)");
  const double rate = params.rate();
  const double h = binary_entropy(i / n).bits;
  return -n * (1.0 - rate - h) - rate * i * snr.linear() * std::numbers::log2e;
}

double dominant_weight(const CodeParams& params, const SnrPoint& snr) {
  if (std::isnan(snr.linear()) || snr.linear() < 0.0)
    throw std::domain_error("dominant_weight: ebn0 must be >= 0");
  return static_cast<double>(params.n) / (std::exp(params.rate() * snr.linear()) + 1.0);
}

BoundValue max_term_approx(const CodeParams& params, const SnrPoint& snr,
                           bool include_prefactor) {
  check_snr_positive(snr);
  if (params.d > params.n - 1)
    throw std::domain_error("max_term_approx: needs d <= n - 1");
  const double ideal = dominant_weight(params, snr);
  const double lo = static_cast<double>(params.d);
  const double hi = static_cast<double>(params.n - 1);
  auto clamp = [&](double v) { return v < lo ? lo : (v > hi ? hi : v); };
  const double i0 = clamp(std::floor(ideal));
  const double i1 = clamp(std::ceil(ideal));
  auto term = [&](double i) {
    double log2f = f_eval(params, i, snr);
    if (include_prefactor)
      log2f -= 0.5 * std::log2(4.0 * std::numbers::pi * params.rate() * i * snr.linear());
    return log2f;
  };
  const double best = std::max(term(i0), term(i1));
  return clamp_to_probability(best * std::numbers::ln2);
}

BoundCurve sweep(BoundMethod method, const LogWeightSpectrum& spectrum, const CodeParams& params,
                 std::span<const SnrPoint> grid, const SweepOptions& options) {
  check_pairing(spectrum, params);
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i].db() > grid[i - 1].db()))
      throw std::invalid_argument("sweep: grid must be strictly increasing in dB");

  BoundCurve curve;
  curve.label = bound_method_id(method);
  curve.note = "n=" + std::to_string(spectrum.n) + " dmin=" + std::to_string(spectrum.d_min);
  curve.points.resize(grid.size());

  const TsbBound* tsb = nullptr;
  TsbBound tsb_storage = method == BoundMethod::tsb ? TsbBound(spectrum, params)
                                                    : TsbBound(LogWeightSpectrum{1, 1, {0.0}},
                                                               CodeParams(1, 1, 1));
  if (method == BoundMethod::tsb) tsb = &tsb_storage;

  detail::parallel_for(grid.size(), options.max_workers, [&](std::size_t i) {
    try {
      BoundValue v;
      switch (method) {
        case BoundMethod::union_bound: v = union_bound(spectrum, params, grid[i]); break;
        case BoundMethod::first_term: v = first_term_bound(spectrum, params, grid[i]); break;
        case BoundMethod::max_term: v = max_term_approx(params, grid[i], options.include_prefactor); break;
        case BoundMethod::tsb: v = tsb->evaluate(grid[i]); break;
      }
      curve.points[i] = BoundCurvePoint{grid[i].db(), v.p.log10(), v.vacuous, v.degraded};
    } catch (const std::exception& e) {
      throw numerical_error("sweep: grid point " + std::to_string(i) + " (" +
                            std::to_string(grid[i].db()) + " dB): " + e.what());
    }
  });

  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    // All implemented bounds decay with SNR; allow only fp-level wiggle.
    if (curve.points[i].log10_wer > curve.points[i - 1].log10_wer + 1e-9)
      throw numerical_error("sweep: bound not monotone at grid point " + std::to_string(i));
  }
  return curve;
}

}  // namespace critpoint
