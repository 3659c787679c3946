#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "zerowell/model.hpp"
#include "zerowell/probgen.hpp"
#include "zerowell/spectrum.hpp"

namespace zerowell {

/// A curve between two walls with vertical markers at the delta positions.
struct PlotData {
  std::vector<Sample> points;
  double wall_left;
  double wall_right;
  std::vector<double> markers;
};

/// Knots only; markers at every kink.
PlotData plot_data(const PiecewiseLinearState& state);
/// The drawn state with markers at the solution spikes.
PlotData plot_data(const Problem& problem);
/// Samples of one eigenstate (level 0 is the lowest found), markers at the spikes.
PlotData plot_data(const SpectrumResult& spectrum, std::size_t level);

enum class PlotFormat { kCsv, kSvg };

/// Header "x,psi" then one row per point, shortest round-trip decimals.
std::string render_csv(const PlotData& data);
/// Self-contained SVG: walls, zero axis, spike markers and the curve as a polyline.
std::string render_svg(const PlotData& data);

/// Writes the rendered plot; throws IoError if the file cannot be written.
void emit_plot(const PlotData& data, PlotFormat format, const std::filesystem::path& path);

}  // namespace zerowell
