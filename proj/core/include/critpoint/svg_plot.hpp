#pragma once

#include <string>
#include <vector>

#include "critpoint/curve_io.hpp"

namespace critpoint {

struct PlotMarker {
  double ebno_db = 0.0;
  double log10_wer = 0.0;
};

struct PlotOptions {
  int width = 720;
  int height = 540;
  std::string title;                 // empty = no title row
  std::vector<PlotMarker> markers;   // rendered as labeled diamonds
};

// Renders curves as a self-contained SVG string: linear dB abscissa, log10
// WER as a linear ordinate, one polyline per finite run of each series, a
// legend built from series labels, and one diamond per marker. Only generic
// (monospace) fonts and fixed-precision coordinates are used, so identical
// inputs produce identical bytes. Throws std::invalid_argument when nothing
// is plottable.
std::string render_svg_plot(const std::vector<PlotSeries>& series, const PlotOptions& options);

}  // namespace critpoint
