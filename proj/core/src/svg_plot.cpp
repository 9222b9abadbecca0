#include "critpoint/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace critpoint {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Tick label: trims to a compact fixed representation (no exponent churn).
std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // +0.0 canonicalizes -0
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo <= hi)) throw std::invalid_argument("render_svg_plot: no finite data to plot");
    if (lo == hi) {
      lo -= 1.0;
      hi += 1.0;
    } else {
      const double m = 0.05 * (hi - lo);
      lo -= m;
      hi += m;
    }
  }
};

// 1-2-5 tick spacing aiming for about `target` intervals.
std::vector<double> ticks(const Range& r, int target) {
  const double raw = (r.hi - r.lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = 10.0 * mag;
  for (double mult : {1.0, 2.0, 5.0}) {
    if (mult * mag >= raw) {
      step = mult * mag;
      break;
    }
  }
  std::vector<double> out;
  for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 0.5 * step; v += step) {
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return out;
}

}  // namespace

std::string render_svg_plot(const std::vector<PlotSeries>& series, const PlotOptions& options) {
  Range xr, yr;
  for (const auto& s : series) {
    for (size_t i = 0; i < s.ebno_db.size(); ++i) {
      if (std::isfinite(s.ebno_db[i]) && std::isfinite(s.log10_wer[i])) {
        xr.add(s.ebno_db[i]);
        yr.add(s.log10_wer[i]);
      }
    }
  }
  for (const auto& m : options.markers) {
    xr.add(m.ebno_db);
    yr.add(m.log10_wer);
  }
  xr.pad();
  yr.pad();

  const double ml = 70.0, mr = 18.0, mb = 48.0;
  const double mt = options.title.empty() ? 18.0 : 40.0;
  const double W = options.width, H = options.height;
  const double pw = W - ml - mr, ph = H - mt - mb;
  if (pw <= 0 || ph <= 0) throw std::invalid_argument("render_svg_plot: canvas too small");
  const auto X = [&](double db) { return ml + (db - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto Y = [&](double lw) { return mt + (yr.hi - lw) / (yr.hi - yr.lo) * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W, "%.0f") +
         "\" height=\"" + num(H, "%.0f") + "\" viewBox=\"0 0 " + num(W, "%.0f") + " " +
         num(H, "%.0f") + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg += "<text x=\"" + num(W / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">" +
           options.title + "</text>\n";
  }

  // Grid and tick labels.
  for (double t : ticks(xr, 8)) {
    const double x = X(t);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(mt + ph) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(mt + ph + 16) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" +
           tick_label(t) + "</text>\n";
  }
  for (double t : ticks(yr, 8)) {
    const double y = Y(t);
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(y) + "\" x2=\"" + num(ml + pw) +
           "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(ml - 6) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + tick_label(t) +
           "</text>\n";
  }
  svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(H - 10) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">Eb/N0 (dB)"
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(mt + ph / 2) +
         "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" transform=\""
         "rotate(-90 16 " +
         num(mt + ph / 2) + ")\">log10 WER</text>\n";

  // Series: one polyline per maximal run of finite points.
  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
    std::string pts;
    const auto flush = [&]() {
      if (!pts.empty()) {
        svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        pts.clear();
      }
    };
    for (size_t i = 0; i < s.ebno_db.size(); ++i) {
      if (std::isfinite(s.ebno_db[i]) && std::isfinite(s.log10_wer[i])) {
        if (!pts.empty()) pts += " ";
        pts += num(X(s.ebno_db[i])) + "," + num(Y(s.log10_wer[i]));
      } else {
        flush();
      }
    }
    flush();
  }

  // Legend, top right inside the plot area.
  for (size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
    const double y = mt + 14 + 16 * static_cast<double>(si);
    svg += "<line x1=\"" + num(ml + pw - 130) + "\" y1=\"" + num(y - 4) + "\" x2=\"" +
           num(ml + pw - 104) + "\" y2=\"" + num(y - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(ml + pw - 98) + "\" y=\"" + num(y) +
           "\" font-family=\"monospace\" font-size=\"11\">" + series[si].label + "</text>\n";
  }

  // Markers: labeled diamonds.
  for (const auto& m : options.markers) {
    const double x = X(m.ebno_db), y = Y(m.log10_wer);
    svg += "<path class=\"critical-marker\" d=\"M " + num(x) + " " + num(y - 6) + " L " +
           num(x + 6) + " " + num(y) + " L " + num(x) + " " + num(y + 6) + " L " + num(x - 6) +
           " " + num(y) + " Z\" fill=\"black\"/>\n";
    svg += "<text x=\"" + num(x + 9) + "\" y=\"" + num(y - 7) +
           "\" font-family=\"monospace\" font-size=\"11\">(" + num(m.ebno_db, "%.4f") + ", " +
           num(m.log10_wer, "%.3f") + ")</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace critpoint
