// critpoint: command-line front end for critical-point and decoding-bound
// analysis of linear block codes on the BPSK/AWGN channel.
//
// Subcommands: critical (Eb/N0 and WER where the d_min term takes over the
// random-like union bound), bounds (ML upper-bound sweeps to CSV), gv
// (Gilbert-Varshamov distances under both conventions), simulate
// (Monte-Carlo WER for hard/soft decoders), plot (CSV curves to SVG).
//
// Exit codes: 0 success, 2 usage/domain/input error, 3 numeric failure.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critpoint/block_code.hpp"
#include "critpoint/bounds.hpp"
#include "critpoint/channel.hpp"
#include "critpoint/critical.hpp"
#include "critpoint/curve_io.hpp"
#include "critpoint/errors.hpp"
#include "critpoint/monte_carlo.hpp"
#include "critpoint/spectrum.hpp"
#include "critpoint/svg_plot.hpp"

namespace {

using namespace critpoint;

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path) {
    atomic_write_file(*out_path, content);
  } else {
    std::fputs(content.c_str(), stdout);
  }
}

int cmd_critical(long long n, long long k, long long d) {
  const CodeParams params(n, k, d);
  const CriticalPoint cp = critical_point(params);
  if (cp.db_defined) {
    std::printf("ebn0_crit_db=%.4f log10_wer=%.3f\n", cp.ebn0_db, cp.log10_wer);
  } else {
    std::printf("ebn0_crit_db=undefined log10_wer=%.3f\n", cp.log10_wer);
  }
  std::printf("ebn0_crit_linear=%.4f\n", cp.ebn0_linear);
  return 0;
}

int cmd_bounds(long long n, long long k, long long d, const std::vector<std::string>& methods,
               const std::string& grid_spec, const std::optional<std::string>& spectrum_path,
               bool include_prefactor, int max_workers,
               const std::optional<std::string>& out_path) {
  const CodeParams params(n, k, d);
  const LogWeightSpectrum spectrum =
      spectrum_path ? load_spectrum(std::filesystem::path(*spectrum_path))
                    : random_spectrum(params);

  const std::vector<double> grid_db = parse_ebno_grid(grid_spec);
  std::vector<SnrPoint> grid;
  grid.reserve(grid_db.size());
  for (double db : grid_db) grid.push_back(SnrPoint::from_db(db));

  SweepOptions options;
  options.include_prefactor = include_prefactor;
  options.max_workers = max_workers < 0 ? 0u : static_cast<unsigned>(max_workers);

  std::vector<BoundCurve> curves;
  std::string method_list;
  for (const auto& id : methods) {
    curves.push_back(sweep(bound_method_from_id(id), spectrum, params, grid, options));
    method_list += (method_list.empty() ? "" : ",") + id;
  }

  const std::vector<std::string> metadata = {
      "critpoint bounds (log10 of ML word-error upper bounds vs Eb/N0)",
      "code: n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d),
      "spectrum: " +
          (spectrum_path ? "file " + *spectrum_path
                         : std::string("random-like, truncated at d")) +
          " (n=" + std::to_string(spectrum.n) + " dmin=" + std::to_string(spectrum.d_min) + ")",
      "methods: " + method_list,
      "include_prefactor: " + std::to_string(include_prefactor ? 1 : 0),
  };
  emit(out_path, bounds_curves_to_csv(curves, metadata));
  return 0;
}

int cmd_gv(long long n, long long k, bool exact, bool asymptotic) {
  if (k < 1 || k >= n) throw std::domain_error("gv: need 1 <= k < n");
  const double rate = static_cast<double>(k) / static_cast<double>(n);
  std::optional<long long> d_asym, d_exact;
  if (asymptotic) d_asym = gv_distance_asymptotic(n, rate);
  if (exact) d_exact = gv_distance_exact(n, k);
  if (d_asym) std::printf("gv_asymptotic=%lld\n", *d_asym);
  if (d_exact) std::printf("gv_exact=%lld\n", *d_exact);
  if (d_asym && d_exact) {
    if (*d_asym == *d_exact) {
      std::printf("note=both conventions agree\n");
    } else {
      std::printf(
          "note=conventions differ by %lld: asymptotic rounds n*Hinv(1-R); exact takes the "
          "largest d with sum_{i<=d-2} C(n-1,i) < 2^(n-k)\n",
          *d_exact - *d_asym);
    }
  }
  return 0;
}

int cmd_simulate(const std::string& code_id, const std::string& decoder_id,
                 const std::string& grid_spec, std::uint64_t seed, long long target_errors,
                 long long max_trials, int max_workers,
                 const std::optional<std::string>& out_path) {
  const BlockCode code = BlockCode::from_id(code_id);
  const DecoderId decoder = decoder_from_string(decoder_id);
  const std::vector<double> grid_db = parse_ebno_grid(grid_spec);

  StopRule stop;
  stop.max_trials = max_trials;
  stop.target_word_errors = target_errors;

  std::vector<McEstimate> rows;
  rows.reserve(grid_db.size());
  for (double db : grid_db) {
    rows.push_back(
        run_monte_carlo(code, decoder, SnrPoint::from_db(db), stop, seed, max_workers));
  }

  const std::vector<std::string> metadata = {
      "critpoint simulate (Monte-Carlo word-error rate vs Eb/N0)",
      "code: " + code.id() + " (n_bits=" + std::to_string(code.n_bits()) +
          " k_bits=" + std::to_string(code.k_bits()) + ")",
      "decoder: " + std::string(to_string(decoder)),
      "seed: " + std::to_string(seed) + " (scheme " + std::string(TrialRng::kSchemeId) + ")",
      "stop: target_errors=" + std::to_string(target_errors) +
          " max_trials=" + std::to_string(max_trials),
  };
  emit(out_path, estimates_to_csv(grid_db, rows, metadata));
  return 0;
}

int cmd_plot(const std::vector<std::string>& in_paths, const std::string& out_path,
             const std::vector<std::string>& marker_specs, const std::string& title) {
  std::vector<PlotSeries> series;
  for (const auto& p : in_paths) {
    const std::filesystem::path path(p);
    auto file_series = read_curve_csv(path);
    for (auto& s : file_series) {
      if (in_paths.size() > 1 && s.label != path.stem().string())
        s.label = path.stem().string() + ":" + s.label;
      series.push_back(std::move(s));
    }
  }

  PlotOptions options;
  options.title = title;
  for (const auto& spec : marker_specs) {
    PlotMarker m;
    char trailing = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf%c", &m.ebno_db, &m.log10_wer, &trailing) != 2)
      throw std::invalid_argument("--mark-critical must be db:log10wer, got '" + spec + "'");
    options.markers.push_back(m);
  }

  atomic_write_file(out_path, render_svg_plot(series, options));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-point and decoding-bound analysis for linear block codes (BPSK/AWGN)"};
  app.require_subcommand(1);

  long long n = 0, k = 0, d = 0;
  std::string grid_spec, code_id, decoder_id, out_flag, title;
  std::vector<std::string> methods{"ub", "first", "approx", "tsb"};
  std::string spectrum_path;
  bool include_prefactor = false;
  int max_workers = 0;
  std::uint64_t seed = 0;
  long long target_errors = 100, max_trials = 1000000;
  std::vector<std::string> in_paths, marker_specs;
  bool gv_exact = false, gv_asym = false, gv_both = false;

  auto* c_crit = app.add_subcommand("critical", "Critical point of a code (Eb/N0 and WER)");
  c_crit->add_option("--n", n, "block length")->required();
  c_crit->add_option("--k", k, "dimension")->required();
  c_crit->add_option("--d", d, "minimum distance")->required();

  auto* c_bounds = app.add_subcommand("bounds", "Sweep ML upper bounds over an Eb/N0 grid");
  c_bounds->add_option("--n", n, "block length")->required();
  c_bounds->add_option("--k", k, "dimension")->required();
  c_bounds->add_option("--d", d, "minimum distance")->required();
  c_bounds->add_option("--ebno", grid_spec, "grid start:stop:step in dB")->required();
  c_bounds->add_option("--methods", methods, "subset of ub,first,approx,tsb")
      ->delimiter(',');
  c_bounds->add_option("--spectrum", spectrum_path,
                       "weight-spectrum file (default: random-like truncated at d; "
                       "the file must match --n)");
  c_bounds->add_flag("--include-prefactor", include_prefactor,
                     "multiply the approx term by (4 pi R i ebn0)^{-1/2}");
  c_bounds->add_option("--max-workers", max_workers, "thread cap (0 = hardware)");
  c_bounds->add_option("-o,--out", out_flag, "output CSV path (default: stdout)");

  auto* c_gv = app.add_subcommand("gv", "Gilbert-Varshamov distance of an (n, k) code");
  c_gv->add_option("--n", n, "block length")->required();
  c_gv->add_option("--k", k, "dimension")->required();
  c_gv->add_flag("--exact", gv_exact, "exact combinatorial convention (default)");
  c_gv->add_flag("--asymptotic", gv_asym, "round n*Hinv(1-R)");
  c_gv->add_flag("--both", gv_both, "print both conventions and their discrepancy");

  auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo word-error rate of a decoder");
  c_sim->add_option("--code", code_id, "catalog code id (see README)")->required();
  c_sim->add_option("--decoder", decoder_id, "bdd | chase2 | gmd | ml")->required();
  c_sim->add_option("--ebno", grid_spec, "grid start:stop:step in dB")->required();
  c_sim->add_option("--seed", seed, "RNG seed (required: all randomness flows from it)")
      ->required();
  c_sim->add_option("--target-errors", target_errors, "stop after this many word errors");
  c_sim->add_option("--max-trials", max_trials, "hard trial cap per grid point");
  c_sim->add_option("--max-workers", max_workers, "thread cap (0 = hardware)");
  c_sim->add_option("-o,--out", out_flag, "output CSV path (default: stdout)");

  auto* c_plot = app.add_subcommand("plot", "Render bound/simulation CSVs as an SVG");
  c_plot->add_option("--in", in_paths, "input CSV file(s)")->required()->expected(-1);
  c_plot->add_option("--out", out_flag, "output SVG path")->required();
  c_plot->add_option("--mark-critical", marker_specs, "db:log10wer marker (repeatable)");
  c_plot->add_option("--title", title, "plot title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::optional<std::string> out =
        out_flag.empty() ? std::nullopt : std::optional<std::string>(out_flag);
    if (c_crit->parsed()) return cmd_critical(n, k, d);
    if (c_bounds->parsed()) {
      const std::optional<std::string> spec_path =
          spectrum_path.empty() ? std::nullopt : std::optional<std::string>(spectrum_path);
      return cmd_bounds(n, k, d, methods, grid_spec, spec_path, include_prefactor, max_workers,
                        out);
    }
    if (c_gv->parsed()) {
      if (gv_both && (gv_exact || gv_asym))
        throw std::invalid_argument("gv: --both excludes --exact/--asymptotic");
      const bool want_exact = gv_both || gv_exact || (!gv_asym && !gv_both);
      const bool want_asym = gv_both || gv_asym;
      return cmd_gv(n, k, want_exact, want_asym);
    }
    if (c_sim->parsed())
      return cmd_simulate(code_id, decoder_id, grid_spec, seed, target_errors, max_trials,
                          max_workers, out);
    if (c_plot->parsed()) return cmd_plot(in_paths, out_flag, marker_specs, title);
    return 2;  // unreachable: require_subcommand(1)
  } catch (const std::exception& e) {
    const int rc = cli_exit_code(e);
    std::fprintf(stderr, "%s: %s\n", rc == 2 ? "error" : "internal error", e.what());
    return rc;
  }
}
