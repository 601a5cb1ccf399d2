#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/metrics.hpp"

namespace quatmat {

// Static SVG renderings of the three benchmark figures: mean time vs n,
// timing ratio vs n, mean residual vs n. Output depends only on the input
// records (fixed-precision formatting, algorithms iterated in code order),
// so a given CSV always renders byte-identical files.

namespace plotting {

struct Series {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;  // sorted by x
};

inline const char* algorithm_color(int alg) {
  static const char* palette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};
  return (alg >= 1 && alg <= 6) ? palette[alg - 1] : "#000000";
}

inline std::string fmt(double v, const char* format = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

inline std::string render_chart(const std::string& title, const std::string& x_label,
                                const std::string& y_label,
                                const std::vector<Series>& series) {
  const double width = 720, height = 480;
  const double ml = 80, mr = 170, mt = 48, mb = 56;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool any = false;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        xmin = xmax = x;
        ymax = y;
        any = true;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  }
  if (!any) {
    xmin = 0;
    xmax = 1;
    ymax = 1;
  }
  if (xmax == xmin) {
    xmin -= 1;
    xmax += 1;
  }
  ymin = 0;
  if (ymax <= 0) ymax = 1;
  ymax *= 1.08;

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(width / 2) + "\" y=\"24\" font-size=\"16\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">" + title + "</text>\n";

  // axes
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) +
         "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" +
         fmt(ml + pw) + "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double fx = xmin + (xmax - xmin) * t / 5.0;
    const double fy = ymin + (ymax - ymin) * t / 5.0;
    svg += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" +
           fmt(px(fx)) + "\" y2=\"" + fmt(mt + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(mt + ph + 20) +
           "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
           fmt(fx, "%.4g") + "</text>\n";
    svg += "<line x1=\"" + fmt(ml - 5) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" +
           fmt(ml) + "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(fy) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" +
           fmt(fy, "%.3g") + "</text>\n";
  }
  svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(height - 10) +
         "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
         x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt(mt + ph / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 18 " + fmt(mt + ph / 2) + ")\">" + y_label +
         "</text>\n";

  double legend_y = mt + 10;
  for (const auto& s : series) {
    if (!s.points.empty()) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        pts += fmt(px(x), "%.2f") + "," + fmt(py(y), "%.2f") + " ";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
      for (const auto& [x, y] : s.points) {
        svg += "<circle cx=\"" + fmt(px(x), "%.2f") + "\" cy=\"" + fmt(py(y), "%.2f") +
               "\" r=\"2.6\" fill=\"" + s.color + "\"/>\n";
      }
    }
    svg += "<line x1=\"" + fmt(ml + pw + 12) + "\" y1=\"" + fmt(legend_y) + "\" x2=\"" +
           fmt(ml + pw + 34) + "\" y2=\"" + fmt(legend_y) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(ml + pw + 40) + "\" y=\"" + fmt(legend_y + 4) +
           "\" font-size=\"11\" font-family=\"sans-serif\">" + s.name + "</text>\n";
    legend_y += 18;
  }
  if (!any) {
    svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(mt + ph / 2) +
           "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
           "no data</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("plot: cannot open '" + path + "'");
  out << content;
  if (!out) throw IoError("plot: short write to '" + path + "'");
}

inline std::vector<Series> value_series(
    const std::map<std::size_t, std::map<int, double>>& by_n_alg) {
  std::vector<Series> series;
  for (int alg = 1; alg <= 6; ++alg) {
    Series s;
    s.name = std::string("alg ") + std::to_string(alg) + " (" +
             algorithm_name(algorithm_from_code(alg)) + ")";
    s.color = algorithm_color(alg);
    for (const auto& [n, by_alg] : by_n_alg) {
      const auto it = by_alg.find(alg);
      if (it != by_alg.end()) {
        s.points.emplace_back(static_cast<double>(n), it->second);
      }
    }
    if (!s.points.empty()) series.push_back(std::move(s));
  }
  return series;
}

}  // namespace plotting

inline void write_time_plot(const std::vector<BenchmarkRecord>& records,
                            const std::string& path) {
  const BenchSummary s = summarize(records);
  plotting::write_file(path, plotting::render_chart("mean inversion wall time", "n",
                                                    "seconds",
                                                    plotting::value_series(s.mean_time)));
}

inline void write_ratio_plot(const std::vector<BenchmarkRecord>& records,
                             const std::string& path) {
  std::map<std::size_t, std::map<int, double>> ratios;
  try {
    ratios = timing_ratio(records);
  } catch (const UsageError&) {
    // no skew-real baseline in the sweep; render an empty chart
  }
  plotting::write_file(
      path, plotting::render_chart("timing ratio vs skew-real baseline", "n",
                                   "r_{n,s}", plotting::value_series(ratios)));
}

inline void write_residual_plot(const std::vector<BenchmarkRecord>& records,
                                const std::string& path) {
  const BenchSummary s = summarize(records);
  plotting::write_file(
      path, plotting::render_chart("mean right residual", "n", "residual",
                                   plotting::value_series(s.mean_residual)));
}

}  // namespace quatmat
