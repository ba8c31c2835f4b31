#include "sqzcav/plot.hpp"

#include "sqzcav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace sqzcav {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 30, kTop = 40, kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;

const char* const kPalette[] = {"#c0392b", "#2c6fbb", "#27ae60", "#8e44ad",
                                "#d68910", "#17a589", "#7f8c8d", "#34495e"};

struct Range {
  double lo = 0.0, hi = 1.0;
  void fit(const std::vector<double>& v) {
    lo = *std::min_element(v.begin(), v.end());
    hi = *std::max_element(v.begin(), v.end());
    if (!(hi > lo)) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= pad;
      hi += pad;
    }
  }
  double map(double v, double a, double b) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::string label(const Column& c) { return c.unit == "1" ? c.name : c.name + " [" + c.unit + "]"; }

void axes(std::ostringstream& svg, const Range& xr, const Range& yr, const std::string& xl,
          const std::string& yl, const std::string& title) {
  svg << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << kPlotW << "' height='" << kPlotH
      << "' fill='none' stroke='black'/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double px = kLeft + kPlotW * i / 4.0;
    svg << "<text x='" << px << "' y='" << kTop + kPlotH + 18
        << "' font-size='11' text-anchor='middle'>" << num(fx) << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double py = kTop + kPlotH - kPlotH * i / 4.0;
    svg << "<text x='" << kLeft - 6 << "' y='" << py + 4
        << "' font-size='11' text-anchor='end'>" << num(fy) << "</text>\n";
  }
  svg << "<text x='" << kLeft + kPlotW / 2 << "' y='" << kHeight - 15
      << "' font-size='13' text-anchor='middle'>" << xl << "</text>\n";
  svg << "<text x='18' y='" << kTop + kPlotH / 2 << "' font-size='13' text-anchor='middle' "
      << "transform='rotate(-90 18 " << kTop + kPlotH / 2 << ")'>" << yl << "</text>\n";
  svg << "<text x='" << kWidth / 2 << "' y='24' font-size='14' text-anchor='middle'>" << title
      << "</text>\n";
}

void lines(std::ostringstream& svg, const ResultTable& t, const PlotSpec& spec) {
  if (spec.y.empty()) throw InvalidArgument("plot: no y columns");
  const std::vector<double> x = t.column(spec.x);

  // curves: (legend, xs, ys)
  struct Curve {
    std::string name;
    std::vector<double> xs, ys;
  };
  std::vector<Curve> curves;
  for (const std::string& yc : spec.y) {
    const std::vector<double> y = t.column(yc);
    if (spec.group.empty()) {
      curves.push_back({yc, x, y});
      continue;
    }
    const std::vector<double> g = t.column(spec.group);
    std::map<double, std::size_t> slot;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto [it, fresh] = slot.try_emplace(g[i], curves.size());
      if (fresh) curves.push_back({yc + " @ " + spec.group + "=" + num(g[i]), {}, {}});
      curves[it->second].xs.push_back(x[i]);
      curves[it->second].ys.push_back(y[i]);
    }
  }
  std::vector<double> ally;
  for (const auto& c : curves) ally.insert(ally.end(), c.ys.begin(), c.ys.end());
  Range xr, yr;
  xr.fit(x);
  yr.fit(ally);
  const Column& xc = t.columns()[t.column_index(spec.x)];
  axes(svg, xr, yr, label(xc), spec.y.size() == 1 ? spec.y.front() : "value", spec.title);

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const char* colour = kPalette[k % std::size(kPalette)];
    svg << "<polyline fill='none' stroke-width='1.5' stroke='" << colour << "' points='";
    for (std::size_t i = 0; i < curves[k].xs.size(); ++i)
      svg << xr.map(curves[k].xs[i], kLeft, kLeft + kPlotW) << ','
          << yr.map(curves[k].ys[i], kTop + kPlotH, kTop) << ' ';
    svg << "'/>\n";
    svg << "<text x='" << kLeft + kPlotW - 8 << "' y='" << kTop + 16 + 14 * k
        << "' font-size='11' text-anchor='end' fill='" << colour << "'>" << curves[k].name
        << "</text>\n";
  }
}

// Colour ramp from dark blue through white-ish to dark red.
std::string ramp(double f) {
  f = std::clamp(f, 0.0, 1.0);
  const double r = f < 0.5 ? 40 + 430 * f : 255;
  const double g = f < 0.5 ? 60 + 360 * f : 240 - 400 * (f - 0.5);
  const double b = f < 0.5 ? 160 + 180 * f : 250 - 400 * (f - 0.5);
  std::ostringstream os;
  os << "rgb(" << static_cast<int>(std::clamp(r, 0.0, 255.0)) << ','
     << static_cast<int>(std::clamp(g, 0.0, 255.0)) << ','
     << static_cast<int>(std::clamp(b, 0.0, 255.0)) << ')';
  return os.str();
}

void heatmap(std::ostringstream& svg, const ResultTable& t, const PlotSpec& spec) {
  if (spec.y.size() != 1 || spec.z.empty())
    throw InvalidArgument("plot: heatmap needs exactly one y column and a z column");
  const std::vector<double> x = t.column(spec.x), y = t.column(spec.y.front()), z = t.column(spec.z);
  std::vector<double> xs = x, ys = y;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (xs.size() < 2 || ys.size() < 2)
    throw InvalidArgument("plot: heatmap needs at least two distinct x and y values");
  Range xr, yr, zr;
  xr.fit(xs);
  yr.fit(ys);
  zr.fit(z);
  const double cw = kPlotW / static_cast<double>(xs.size());
  const double ch = kPlotH / static_cast<double>(ys.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto ix = std::lower_bound(xs.begin(), xs.end(), x[i]) - xs.begin();
    const auto iy = std::lower_bound(ys.begin(), ys.end(), y[i]) - ys.begin();
    svg << "<rect x='" << kLeft + cw * static_cast<double>(ix) << "' y='"
        << kTop + kPlotH - ch * static_cast<double>(iy + 1) << "' width='" << cw + 0.5
        << "' height='" << ch + 0.5 << "' fill='" << ramp((z[i] - zr.lo) / (zr.hi - zr.lo))
        << "'/>\n";
  }
  axes(svg, xr, yr, label(t.columns()[t.column_index(spec.x)]),
       label(t.columns()[t.column_index(spec.y.front())]),
       spec.title + " (colour: " + spec.z + ", " + num(zr.lo) + " to " + num(zr.hi) + ")");
}

}  // namespace

std::string render_svg(const ResultTable& table, const PlotSpec& spec) {
  if (table.empty()) throw InvalidArgument("plot: table is empty");
  std::ostringstream svg;
  svg << "<?xml version='1.0' encoding='UTF-8'?>\n"
      << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' font-family='sans-serif'>\n<rect width='100%' height='100%' fill='white'/>\n";
  if (spec.kind == PlotKind::Lines) lines(svg, table, spec);
  else heatmap(svg, table, spec);
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const ResultTable& table, const PlotSpec& spec, const std::filesystem::path& path) {
  const std::string doc = render_svg(table, spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc;
}

}  // namespace sqzcav
