#include "critpoint/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "critpoint/errors.hpp"

namespace critpoint {

namespace {

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ls(line);
  while (std::getline(ls, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& cell, int line_no) {
  try {
    size_t pos = 0;
    const double v = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw parse_error("bad numeric value '" + cell + "'", line_no);
  }
}

}  // namespace

std::vector<double> parse_ebno_grid(const std::string& spec) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      (in >> std::ws, !in.eof())) {
    throw std::invalid_argument("grid must be start:stop:step, got '" + spec + "'");
  }
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  if (!(start < stop)) throw std::invalid_argument("grid start must be < stop");
  std::vector<double> grid;
  for (long long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::invalid_argument("cannot replace file: " + path.string());
  }
}

std::string bounds_curves_to_csv(const std::vector<BoundCurve>& curves,
                                 const std::vector<std::string>& metadata) {
  if (curves.empty()) throw std::invalid_argument("bounds_curves_to_csv: no curves");
  const size_t rows = curves.front().points.size();
  for (const auto& c : curves) {
    if (c.points.size() != rows)
      throw std::invalid_argument("bounds_curves_to_csv: curves disagree on grid size");
  }
  std::string out;
  for (const auto& m : metadata) out += "# " + m + "\n";
  out += "ebno_db";
  for (const auto& c : curves) out += "," + c.label;
  out += ",status\n";
  for (size_t i = 0; i < rows; ++i) {
    out += format("%.4f", curves.front().points[i].ebno_db);
    std::string status;
    for (const auto& c : curves) {
      const auto& p = c.points[i];
      out += "," + format("%.6f", p.log10_wer);
      if (p.vacuous) status += (status.empty() ? "" : ";") + c.label + ":vacuous";
      if (p.degraded) status += (status.empty() ? "" : ";") + c.label + ":degraded";
    }
    out += "," + (status.empty() ? "ok" : status) + "\n";
  }
  return out;
}

std::string estimates_to_csv(const std::vector<double>& ebno_db,
                             const std::vector<McEstimate>& rows,
                             const std::vector<std::string>& metadata) {
  if (ebno_db.size() != rows.size())
    throw std::invalid_argument("estimates_to_csv: grid/estimate size mismatch");
  std::string out;
  for (const auto& m : metadata) out += "# " + m + "\n";
  out += "ebno_db,trials,errors,wer,ci_low,ci_high\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& e = rows[i];
    out += format("%.4f", ebno_db[i]);
    out += "," + std::to_string(e.trials) + "," + std::to_string(e.word_errors);
    out += "," + format("%.6e", e.wer_hat);
    out += "," + format("%.6e", e.ci95_low);
    out += "," + format("%.6e", e.ci95_high) + "\n";
  }
  return out;
}

std::vector<PlotSeries> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve file: " + path.string());

  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    header = split_csv(line);
    break;
  }
  if (header.empty()) throw parse_error("missing CSV header", line_no);
  if (header.front() != "ebno_db") throw parse_error("first column must be ebno_db", line_no);

  // Decide the schema from the header, then map value columns to series.
  bool simulate_schema = false;
  size_t wer_col = 0;
  std::vector<size_t> series_cols;
  std::vector<PlotSeries> series;
  for (size_t j = 1; j < header.size(); ++j) {
    if (header[j] == "wer") {
      simulate_schema = true;
      wer_col = j;
    }
  }
  if (simulate_schema) {
    series.push_back({path.stem().string(), {}, {}});
  } else {
    for (size_t j = 1; j < header.size(); ++j) {
      if (header[j] == "status") {
        if (j + 1 != header.size()) throw parse_error("status must be the last column", line_no);
        break;
      }
      if (header[j].empty()) throw parse_error("empty column label", line_no);
      series_cols.push_back(j);
      series.push_back({header[j], {}, {}});
    }
    if (series.empty()) throw parse_error("no value columns", line_no);
  }

  double prev_db = -std::numeric_limits<double>::infinity();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size())
      throw parse_error("expected " + std::to_string(header.size()) + " columns, got " +
                            std::to_string(cells.size()),
                        line_no);
    const double db = parse_double(cells[0], line_no);
    if (!(db > prev_db)) throw parse_error("rows must be sorted by increasing ebno_db", line_no);
    prev_db = db;
    if (simulate_schema) {
      const double wer = parse_double(cells[wer_col], line_no);
      if (wer < 0.0 || wer > 1.0) throw parse_error("wer outside [0, 1]", line_no);
      series[0].ebno_db.push_back(db);
      series[0].log10_wer.push_back(std::log10(wer));
    } else {
      for (size_t s = 0; s < series_cols.size(); ++s) {
        series[s].ebno_db.push_back(db);
        series[s].log10_wer.push_back(parse_double(cells[series_cols[s]], line_no));
      }
    }
  }
  if (series.front().ebno_db.empty()) throw parse_error("no data rows", line_no);
  return series;
}

}  // namespace critpoint
