#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace critpoint {

// Block-code parameters. Validated on construction: n >= 1, 1 <= k <= n,
// 1 <= d <= n.
struct CodeParams {
  long long n = 0;
  long long k = 0;
  long long d = 0;

  CodeParams(long long n_, long long k_, long long d_);
  double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

// Weight spectrum in the natural-log domain: ln_coeffs[w - d_min] = ln A_w for
// w = d_min .. n. -inf encodes an exactly-zero multiplicity; the all-zero
// codeword (weight 0) is never part of the spectrum.
struct LogWeightSpectrum {
  long long n = 0;
  long long d_min = 0;
  std::vector<double> ln_coeffs;

  double ln_coeff(long long w) const;  // -inf outside [d_min, n]
  void validate() const;               // throws std::invalid_argument
};

// Random-like (binomial) spectrum truncated at d: ln A_i = ln C(n,i) - (n-k) ln 2.
LogWeightSpectrum random_spectrum(const CodeParams& params);

// Text format: '#' comments, header "n=<int> dmin=<int>", then one
// "<weight> <ln_coeff>" line per weight, strictly increasing. Weights missing
// from a file are read as exactly zero (-inf); a weight-0 line is accepted
// only with coefficient 0 (the all-zero codeword) and is not stored.
// save_spectrum emits the dense canonical form at 17 significant digits, so
// the textual representation round-trips bit-exactly.
LogWeightSpectrum load_spectrum(std::istream& in);
LogWeightSpectrum load_spectrum(const std::filesystem::path& path);
void save_spectrum(std::ostream& out, const LogWeightSpectrum& spectrum);
std::string spectrum_to_string(const LogWeightSpectrum& spectrum);

// Asymptotic Gilbert-Varshamov distance: round(n * Hinv(1 - R)), half away
// from zero, clamped to at least 1. rate must lie in (0, 1).
long long gv_distance_asymptotic(long long n, double rate);

// Exact combinatorial convention: largest d with sum_{i=0}^{d-2} C(n-1,i)
// < 2^(n-k). Log-domain sums with a certified margin; comparisons inside the
// margin are settled exactly in 128-bit integers when 2^(n-k) fits.
long long gv_distance_exact(long long n, long long k);

}  // namespace critpoint
