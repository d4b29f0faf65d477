#include "kryspace/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace kryspace {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15e", value);
  return buf;
}

void write_trace_csv(std::ostream& out, const std::vector<SolveRow>& rows) {
  out << "N,residual_norm,error_norm,solution_norm\n";
  for (const auto& row : rows) {
    out << row.iteration << ',' << format_real(row.residual_norm) << ',';
    if (row.error_norm) out << format_real(*row.error_norm);
    out << ',' << format_real(row.solution_norm) << '\n';
  }
}

void write_diagnostics_csv(std::ostream& out, const DiagnosticsReport& report) {
  out << "section,index,value\n";
  for (const auto& p : report.reducibility_defect) {
    out << "reducibility_defect," << p.n << ',' << format_real(p.defect) << '\n';
  }
  if (report.intersection_max_cosine) {
    out << "intersection_max_cosine,0," << format_real(*report.intersection_max_cosine) << '\n';
  }
  for (const auto& [index, magnitude] : report.kernel_error_profile) {
    out << "kernel_error," << index << ',' << format_real(magnitude) << '\n';
  }
  if (report.off_kernel_max) out << "off_kernel_max,0," << format_real(*report.off_kernel_max) << '\n';
}

void write_classk_csv(std::ostream& out, const std::vector<ClassKRow>& rows, Complex center, double radius,
                      double g_norm) {
  out << "degree,error_norm,bound,residual_norm\n";
  for (const auto& row : rows) {
    const double bound = inverse_poly(center, row.degree).remainder_bound(radius) * g_norm;
    out << row.degree << ',' << format_real(row.error_norm) << ',' << format_real(bound) << ','
        << format_real(row.residual_norm) << '\n';
  }
}

namespace {

struct Panel {
  std::string label;
  bool log_y;
  std::vector<std::pair<double, double>> points;
};

void draw_panel(std::ostringstream& svg, const Panel& panel, double x0, double y0, double width, double height) {
  constexpr double margin = 40.0;
  const double px = x0 + margin, py = y0 + 20.0;
  const double pw = width - margin - 10.0, ph = height - 50.0;
  svg << "<rect x='" << px << "' y='" << py << "' width='" << pw << "' height='" << ph
      << "' fill='none' stroke='#444'/>\n";
  svg << "<text x='" << px + pw / 2 << "' y='" << y0 + 14 << "' text-anchor='middle' font-size='12'>" << panel.label
      << (panel.log_y ? " (log)" : "") << "</text>\n";

  std::vector<std::pair<double, double>> pts;
  for (auto [x, y] : panel.points) {
    if (panel.log_y) {
      if (!(y > 0.0)) continue;
      y = std::log10(y);
    }
    if (std::isfinite(y)) pts.emplace_back(x, y);
  }
  if (pts.empty()) return;
  double xmin = pts.front().first, xmax = pts.front().first;
  double ymin = pts.front().second, ymax = pts.front().second;
  for (auto [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  auto sx = [&](double x) { return px + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return py + ph - (y - ymin) / (ymax - ymin) * ph; };

  char buf[64];
  auto tick = [&](double y) {
    std::snprintf(buf, sizeof buf, panel.log_y ? "1e%.0f" : "%.3g", y);
    return std::string(buf);
  };
  svg << "<text x='" << px - 4 << "' y='" << py + 4 << "' text-anchor='end' font-size='9'>" << tick(ymax)
      << "</text>\n";
  svg << "<text x='" << px - 4 << "' y='" << py + ph << "' text-anchor='end' font-size='9'>" << tick(ymin)
      << "</text>\n";
  svg << "<text x='" << px << "' y='" << py + ph + 14 << "' font-size='9'>" << xmin << "</text>\n";
  svg << "<text x='" << px + pw << "' y='" << py + ph + 14 << "' text-anchor='end' font-size='9'>" << xmax
      << "</text>\n";

  svg << "<polyline fill='none' stroke='#1f5fa8' stroke-width='1.2' points='";
  for (auto [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(x), sy(y));
    svg << buf;
  }
  svg << "'/>\n";
}

}  // namespace

std::string render_trace_svg(const std::vector<SolveRow>& rows, const std::string& title) {
  Panel error{"error norm", true, {}};
  Panel residual{"residual norm", true, {}};
  Panel solution{"solution norm", false, {}};
  for (const auto& row : rows) {
    const double n = static_cast<double>(row.iteration);
    if (row.error_norm) error.points.emplace_back(n, *row.error_norm);
    residual.points.emplace_back(n, row.residual_norm);
    solution.points.emplace_back(n, row.solution_norm);
  }
  constexpr double panel_w = 300.0, panel_h = 260.0;
  std::ostringstream svg;
  svg << "<?xml version='1.0' encoding='UTF-8'?>\n";
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << 3 * panel_w << "' height='" << panel_h + 24
      << "' font-family='sans-serif'>\n";
  svg << "<text x='" << 1.5 * panel_w << "' y='16' text-anchor='middle' font-size='14'>" << title << "</text>\n";
  draw_panel(svg, error, 0.0, 24.0, panel_w, panel_h);
  draw_panel(svg, residual, panel_w, 24.0, panel_w, panel_h);
  draw_panel(svg, solution, 2 * panel_w, 24.0, panel_w, panel_h);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace kryspace
