#include <clocale>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "zerowell/errors.hpp"
#include "zerowell/jeopardy.hpp"
#include "zerowell/plot.hpp"

using namespace zerowell;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("tent CSV is just the knots") {
  CHECK(render_csv(plot_data(fixtures::tent())) == "x,psi\n-1,0\n0,1\n1,0\n");
}

TEST_CASE("CSV keeps full precision") {
  const PiecewiseLinearState s({{Scalar(-1), Scalar(0)}, {Scalar::ratio(1, 3), Scalar(0.1)}, {Scalar(1), Scalar(0)}});
  CHECK(render_csv(plot_data(s)) == "x,psi\n-1,0\n0.3333333333333333,0.1\n1,0\n");
}

TEST_CASE("M-state SVG has the five knots and three spike markers") {
  const auto data = plot_data(*forward_construct(fixtures::v2()));
  REQUIRE(data.points.size() == 5);
  CHECK(data.markers.size() == 3);
  const std::string svg = render_svg(data);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "class=\"spike\"") == 3);
  CHECK(count(svg, "class=\"wall\"") == 2);
  CHECK(count(svg, "<polyline") == 1);
  // Peak 2/3 at x = -1/3 maps to the top margin.
  CHECK(svg.find("points=\"40.000,200.000 226.667,40.000 413.333,120.000 506.667,40.000 600.000,200.000\"") !=
        std::string::npos);
  CHECK(svg == render_svg(data));
}

TEST_CASE("spectrum samples plot with one row per sample") {
  const DeltaPotential tuned({{Scalar(0), Scalar(-2)}}, WellConfig());
  const auto r = find_eigenvalues(tuned, ScanOptions{-5, 15});
  const std::string csv = render_csv(plot_data(r, 0));
  CHECK(count(csv, "\n") == 4098);  // header + 4097 rows
  CHECK_THROWS_AS(plot_data(r, 99), DomainError);
}

TEST_CASE("problem plots mark the solution spikes") {
  const Problem p = generate(9, 4, 9);
  CHECK(plot_data(p).markers.size() == 4);
}

TEST_CASE("output does not depend on the C locale") {
  const auto data = plot_data(*forward_construct(fixtures::v2()));
  const std::string csv = render_csv(data);
  const std::string svg = render_svg(data);
  struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
  };
  const std::locale previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  CHECK(render_csv(data) == csv);
  CHECK(render_svg(data) == svg);
  if (std::setlocale(LC_ALL, "de_DE.UTF-8") || std::setlocale(LC_ALL, "fr_FR.UTF-8")) {
    CHECK(render_csv(data) == csv);
    std::setlocale(LC_ALL, "C");
  }
  std::locale::global(previous);
  CHECK(csv.find(',') != std::string::npos);
  CHECK(count(csv, ",") == data.points.size() + 1);
}

TEST_CASE("emit_plot writes files and reports unwritable paths") {
  const auto dir = std::filesystem::temp_directory_path() / "zerowell_plot_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tent.csv";
  emit_plot(plot_data(fixtures::tent()), PlotFormat::kCsv, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "x,psi\n-1,0\n0,1\n1,0\n");
  CHECK_THROWS_AS(emit_plot(plot_data(fixtures::tent()), PlotFormat::kSvg, dir / "missing" / "x.svg"), IoError);
  std::filesystem::remove_all(dir);
}
