#include "zerowell/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "zerowell/errors.hpp"

namespace zerowell {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 40;

// to_chars never consults the locale, so '.' is always the decimal point.
std::string shortest(double v) {
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed3(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  std::string out(buf, res.ptr);
  if (out == "-0.000") out = "0.000";
  return out;
}

}  // namespace

PlotData plot_data(const PiecewiseLinearState& state) {
  PlotData data{{}, state.config().a().to_double(), state.config().b().to_double(), {}};
  for (const auto& k : state.knots()) data.points.push_back({k.x.to_double(), k.psi.to_double()});
  const auto s = slopes(state);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!numerically_equal(s[i].slope, s[i - 1].slope)) data.markers.push_back(state.knots()[i].x.to_double());
  }
  return data;
}

PlotData plot_data(const Problem& problem) {
  PlotData data = plot_data(problem.state);
  data.markers.clear();
  for (const auto& s : problem.solution.spikes()) data.markers.push_back(s.x.to_double());
  return data;
}

PlotData plot_data(const SpectrumResult& spectrum, std::size_t level) {
  if (level >= spectrum.eigenvalues.size()) {
    throw DomainError("spectrum has " + std::to_string(spectrum.eigenvalues.size()) + " levels, requested level " +
                      std::to_string(level));
  }
  const auto& cfg = spectrum.potential.config();
  PlotData data{spectrum.eigenvalues[level].samples, cfg.a().to_double(), cfg.b().to_double(), {}};
  for (const auto& s : spectrum.potential.spikes()) data.markers.push_back(s.x.to_double());
  return data;
}

std::string render_csv(const PlotData& data) {
  std::string out = "x,psi\n";
  for (const auto& p : data.points) {
    out += shortest(p.x);
    out += ',';
    out += shortest(p.psi);
    out += '\n';
  }
  return out;
}

std::string render_svg(const PlotData& data) {
  double peak = 0;
  for (const auto& p : data.points) peak = std::max(peak, std::abs(p.psi));
  if (peak == 0) peak = 1;
  const double span = data.wall_right - data.wall_left;
  const auto px = [&](double x) { return kMargin + (x - data.wall_left) / span * (kWidth - 2 * kMargin); };
  const auto py = [&](double psi) { return kHeight / 2 - psi / peak * (kHeight / 2 - kMargin); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";

  const std::string top = fixed3(kMargin / 2);
  const std::string bottom = fixed3(kHeight - kMargin / 2);
  out += "<g stroke=\"black\" stroke-width=\"4\">\n";
  for (double wall : {data.wall_left, data.wall_right}) {
    const std::string x = fixed3(px(wall));
    out += "<line class=\"wall\" x1=\"" + x + "\" y1=\"" + top + "\" x2=\"" + x + "\" y2=\"" + bottom + "\"/>\n";
  }
  out += "</g>\n";

  const std::string axis_y = fixed3(py(0));
  out += "<line class=\"axis\" x1=\"" + fixed3(px(data.wall_left)) + "\" y1=\"" + axis_y + "\" x2=\"" +
         fixed3(px(data.wall_right)) + "\" y2=\"" + axis_y + "\" stroke=\"gray\" stroke-width=\"1\"/>\n";

  out += "<g stroke=\"red\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  for (double m : data.markers) {
    const std::string x = fixed3(px(m));
    out += "<line class=\"spike\" x1=\"" + x + "\" y1=\"" + top + "\" x2=\"" + x + "\" y2=\"" + bottom + "\"/>\n";
  }
  out += "</g>\n";

  out += "<polyline class=\"psi\" fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    if (i) out += ' ';
    out += fixed3(px(data.points[i].x));
    out += ',';
    out += fixed3(py(data.points[i].psi));
  }
  out += "\"/>\n";
  out += "</svg>\n";
  return out;
}

void emit_plot(const PlotData& data, PlotFormat format, const std::filesystem::path& path) {
  const std::string text = format == PlotFormat::kCsv ? render_csv(data) : render_svg(data);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace zerowell
