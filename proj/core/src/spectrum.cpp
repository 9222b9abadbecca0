#include "critpoint/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "critpoint/errors.hpp"
#include "critpoint/logmath.hpp"

namespace critpoint {

CodeParams::CodeParams(long long n_, long long k_, long long d_) : n(n_), k(k_), d(d_) {
  if (n < 1) throw std::invalid_argument("CodeParams: n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("CodeParams: need 1 <= k <= n");
  if (d < 1 || d > n) throw std::invalid_argument("CodeParams: need 1 <= d <= n");
}

double LogWeightSpectrum::ln_coeff(long long w) const {
  if (w < d_min || w > n) return kNegInf;
  return ln_coeffs[static_cast<std::size_t>(w - d_min)];
}

void LogWeightSpectrum::validate() const {
  if (n < 1) throw std::invalid_argument("LogWeightSpectrum: n must be >= 1");
  if (d_min < 1 || d_min > n) throw std::invalid_argument("LogWeightSpectrum: d_min outside [1, n]");
  if (ln_coeffs.size() != static_cast<std::size_t>(n - d_min + 1))
    throw std::invalid_argument("LogWeightSpectrum: coefficient count != n - d_min + 1");
  for (const double v : ln_coeffs)
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
      throw std::invalid_argument("LogWeightSpectrum: coefficients must be finite or -inf");
}

LogWeightSpectrum random_spectrum(const CodeParams& params) {
  LogWeightSpectrum s;
  s.n = params.n;
  s.d_min = params.d;
  s.ln_coeffs.resize(static_cast<std::size_t>(params.n - params.d + 1));
  const double ln_scale = static_cast<double>(params.n - params.k) * std::numbers::ln2;
  for (long long w = params.d; w <= params.n; ++w)
    s.ln_coeffs[static_cast<std::size_t>(w - params.d)] = ln_binomial(params.n, w) - ln_scale;
  return s;
}

namespace {

bool parse_ln_value(const std::string& tok, double* out) {
  if (tok == "-inf" || tok == "-INF" || tok == "-Inf") {
    *out = kNegInf;
    return true;
  }
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || std::isnan(v)) return false;
  *out = v;
  return true;
}

}  // namespace

LogWeightSpectrum load_spectrum(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, d_min = -1;
  bool have_header = false;
  LogWeightSpectrum s;
  long long prev_w = -1;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tn, td;
      if (!(ls >> tn >> td) || tn.rfind("n=", 0) != 0 || td.rfind("dmin=", 0) != 0)
        throw parse_error("expected header 'n=<int> dmin=<int>'", line_no);
      try {
        n = std::stoll(tn.substr(2));
        d_min = std::stoll(td.substr(5));
      } catch (const std::exception&) {
        throw parse_error("bad integer in header", line_no);
      }
      if (n < 1 || d_min < 1 || d_min > n) throw parse_error("header values out of range", line_no);
      s.n = n;
      s.d_min = d_min;
      s.ln_coeffs.assign(static_cast<std::size_t>(n - d_min + 1), kNegInf);
      have_header = true;
      continue;
    }
    long long w = 0;
    std::string val;
    if (!(ls >> w >> val)) throw parse_error("expected '<weight> <ln_coeff>'", line_no);
    std::string extra;
    if (ls >> extra) throw parse_error("trailing tokens after coefficient", line_no);
    double lnv = 0.0;
    if (!parse_ln_value(val, &lnv)) throw parse_error("bad coefficient '" + val + "'", line_no);
    if (w <= prev_w) throw parse_error("weights must be strictly increasing", line_no);
    prev_w = w;
    if (w > n) throw parse_error("weight exceeds n", line_no);
    if (w == 0) {
      // The all-zero codeword; accepted for compatibility but never stored.
      if (lnv != 0.0) throw parse_error("weight 0 must have coefficient 0", line_no);
      continue;
    }
    if (w < d_min) throw parse_error("weight below dmin", line_no);
    s.ln_coeffs[static_cast<std::size_t>(w - d_min)] = lnv;
  }
  if (!have_header) throw parse_error("empty spectrum file", line_no);
  s.validate();
  return s;
}

LogWeightSpectrum load_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spectrum file: " + path.string());
  return load_spectrum(in);
}

void save_spectrum(std::ostream& out, const LogWeightSpectrum& spectrum) {
  spectrum.validate();
  out << "n=" << spectrum.n << " dmin=" << spectrum.d_min << "\n";
  char buf[64];
  for (long long w = spectrum.d_min; w <= spectrum.n; ++w) {
    const double v = spectrum.ln_coeff(w);
    if (v == kNegInf) {
      out << w << " -inf\n";
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << w << ' ' << buf << '\n';
    }
  }
}

std::string spectrum_to_string(const LogWeightSpectrum& spectrum) {
  std::ostringstream os;
  save_spectrum(os, spectrum);
  return os.str();
}

long long gv_distance_asymptotic(long long n, double rate) {
  if (n < 1) throw std::domain_error("gv_distance_asymptotic: n must be >= 1");
  if (!(rate > 0.0 && rate < 1.0)) throw std::domain_error("gv_distance_asymptotic: rate outside (0,1)");
  const double p = inverse_binary_entropy(1.0 - rate);
  const long long d = std::llround(static_cast<double>(n) * p);
  return d < 1 ? 1 : d;
}

namespace {

// Is sum_{i=0}^{m} C(n1, i) < 2^r ? Exact 128-bit evaluation; requires r <= 62.
bool prefix_sum_less_exact(long long n1, long long m, long long r) {
  const unsigned __int128 target = static_cast<unsigned __int128>(1) << r;
  unsigned __int128 sum = 0;
  unsigned __int128 term = 1;  // C(n1, 0)
  for (long long i = 0;; ++i) {
    sum += term;
    if (sum >= target) return false;
    if (i == m) return true;
    // C(n1, i+1) = C(n1, i) * (n1 - i) / (i + 1); exact at every step.
    term = term * static_cast<unsigned __int128>(n1 - i) / static_cast<unsigned __int128>(i + 1);
  }
}

}  // namespace

long long gv_distance_exact(long long n, long long k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("gv_distance_exact: need 1 <= k <= n");
  const long long r = n - k;
  const double ln_target = static_cast<double>(r) * std::numbers::ln2;
  std::vector<double> terms;
  terms.reserve(16);
  // d = 1 always qualifies (empty sum). Grow m = d - 2 while the sum stays
  // below 2^r; margin 1e-9 certifies the log-domain comparison, ambiguous
  // cases are settled exactly (ties resolve to "not less", matching strict <).
  long long d = 1;
  for (long long m = 0; m <= n - 1; ++m) {
    terms.push_back(ln_binomial(n - 1, m));
    const double ln_sum = log_sum_exp(terms);
    bool less;
    if (ln_sum < ln_target - 1e-9) {
      less = true;
    } else if (ln_sum > ln_target + 1e-9) {
      less = false;
    } else if (r <= 62) {
      less = prefix_sum_less_exact(n - 1, m, r);
    } else {
      less = false;
    }
    if (!less) break;
    d = m + 2;
  }
  return d <= n ? d : n;
}

}  // namespace critpoint
