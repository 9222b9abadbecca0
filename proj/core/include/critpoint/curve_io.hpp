#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "critpoint/bounds.hpp"
#include "critpoint/monte_carlo.hpp"

namespace critpoint {

// Parses "start:stop:step" (dB) into an inclusive grid. Requires
// start < stop and step > 0; the right endpoint is included whenever it
// lands within half a step of the last point. Throws std::invalid_argument.
std::vector<double> parse_ebno_grid(const std::string& spec);

// Writes content to path via a temp file in the same directory plus rename,
// so readers never observe a partial file. Throws std::invalid_argument when
// the destination is not writable.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// Bound-sweep CSV. Leading '#' metadata comments, then
//   ebno_db,<label>[,<label>...],status
// with dB at 4 dp and log10 WER at 6 dp. The status column is "ok" or a
// ';'-joined list of "<label>:vacuous" / "<label>:degraded" tokens. All
// curves must share one grid (they come from one sweep call per method).
std::string bounds_curves_to_csv(const std::vector<BoundCurve>& curves,
                                 const std::vector<std::string>& metadata);

// Simulation CSV: '#' metadata comments, then
//   ebno_db,trials,errors,wer,ci_low,ci_high
// with dB at 4 dp and probabilities in scientific notation.
std::string estimates_to_csv(const std::vector<double>& ebno_db,
                             const std::vector<McEstimate>& rows,
                             const std::vector<std::string>& metadata);

// One plottable curve: log10 WER against Eb/N0 in dB. Non-finite values
// (exact zeros from a simulation, say) are kept; the renderer skips them.
struct PlotSeries {
  std::string label;
  std::vector<double> ebno_db;
  std::vector<double> log10_wer;
};

// Reads either CSV schema emitted by this tool. A bounds file yields one
// series per method column (the status column is ignored); a simulation
// file — recognized by its trials/wer columns — yields a single series
// named after the file stem, converting wer to log10. Rows must be sorted
// by increasing dB. Throws parse_error with a 1-based line number, or
// std::invalid_argument when the file cannot be opened.
std::vector<PlotSeries> read_curve_csv(const std::filesystem::path& path);

}  // namespace critpoint
