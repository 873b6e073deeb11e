#include "layerlab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace layerlab {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

// Minimal deterministic SVG line plot with a framed axis box and an
// optional dashed horizontal reference line.
std::string svg_plot(const std::string& title, const std::vector<Series>& series,
                     const double* reference, const std::string& ref_label) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (reference) {
    ymin = std::min(ymin, *reference);
    ymax = std::max(ymax, *reference);
  }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  const double ypad = 0.08 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  const auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  const auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
     << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
     << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4, yv = ymin + k * (ymax - ymin) / 4;
    os << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << H - B + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xv) << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << fmt(py(yv) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(yv) << "</text>\n";
  }
  if (reference) {
    os << "<line x1=\"" << L << "\" y1=\"" << fmt(py(*reference)) << "\" x2=\"" << W - R
       << "\" y2=\"" << fmt(py(*reference))
       << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    os << "<text x=\"" << W - R - 4 << "\" y=\"" << fmt(py(*reference) - 5)
       << "\" text-anchor=\"end\" font-size=\"11\" fill=\"gray\">" << ref_label << "</text>\n";
  }
  int legend_y = static_cast<int>(T) + 16;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) os << fmt(px(x)) << "," << fmt(py(y)) << " ";
    os << "\"/>\n";
    for (const auto& [x, y] : s.points)
      os << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"2.5\" fill=\""
         << s.color << "\"/>\n";
    os << "<text x=\"" << L + 10 << "\" y=\"" << legend_y << "\" font-size=\"12\" fill=\""
       << s.color << "\">" << s.label << "</text>\n";
    legend_y += 16;
  }
  os << "</svg>\n";
  return os.str();
}

const Certificate* find_cert(const ExperimentReport& rep, CertificateKind kind) {
  for (const auto& c : rep.certificates)
    if (c.kind == kind && !c.trace.empty()) return &c;
  return nullptr;
}

}  // namespace

PlotKind plot_kind_from(const std::string& name) {
  if (name == "convergence") return PlotKind::Convergence;
  if (name == "integral_tail") return PlotKind::IntegralTail;
  if (name == "growth") return PlotKind::Growth;
  fail(ErrorCode::BadParameters, "plot kind must be convergence|integral_tail|growth");
}

std::string plot_emit(const ExperimentReport& rep, PlotKind kind) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
  switch (kind) {
    case PlotKind::Convergence: {
      if (!rep.study || rep.study->table.empty())
        fail(ErrorCode::MissingTable, "report has no spectral table");
      std::map<double, Series> by_R;
      int ci = 0;
      for (const auto& lvl : rep.study->table) {
        auto& s = by_R[lvl.truncation_R];
        if (s.points.empty()) {
          s.label = "R = " + fmt(lvl.truncation_R);
          s.color = colors[ci++ % 5];
        }
        s.points.emplace_back(lvl.h_base, lvl.lambda1);
      }
      std::vector<Series> series;
      for (auto& [r, s] : by_R) {
        std::sort(s.points.begin(), s.points.end());
        series.push_back(s);
      }
      const double kap = rep.kappa1;
      return svg_plot("lambda_1 vs h (" + rep.surface_name + ")", series, &kap, "kappa_1");
    }
    case PlotKind::IntegralTail: {
      const Certificate* c = find_cert(rep, CertificateKind::IntegralInvariant);
      if (!c) fail(ErrorCode::MissingTable, "report has no integral-invariant trace");
      Series s{"I(r)", colors[0], c->trace};
      const double zero = 0.0;
      return svg_plot("curvature integral tail (" + rep.surface_name + ")", {s}, &zero, "0");
    }
    case PlotKind::Growth: {
      const Certificate* c = find_cert(rep, CertificateKind::MeanCurvatureGrowth);
      if (!c) fail(ErrorCode::MissingTable, "report has no mean-curvature growth trace");
      Series s{"G(r)", colors[1], c->trace};
      return svg_plot("mean curvature growth (" + rep.surface_name + ")", {s}, nullptr, "");
    }
  }
  fail(ErrorCode::BadParameters, "unknown plot kind");
}

void plot_emit_file(const ExperimentReport& rep, PlotKind kind, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::BadParameters, "cannot open plot output " + path);
  out << plot_emit(rep, kind);
}

}  // namespace layerlab
