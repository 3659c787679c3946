#include "zerowell/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zerowell/document.hpp"
#include "zerowell/errors.hpp"
#include "zerowell/plot.hpp"

namespace zerowell::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading stdin");
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  if (file.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

Document read_document(const std::string& path, std::istream& in) {
  try {
    return parse_document(read_text(path, in));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

[[noreturn]] void wrong_kind(const std::string& path, const Document& doc, const std::string& wanted) {
  throw ValidationError(path + ": expected a " + wanted + " document, got '" + std::string(kind_name(doc.kind())) + "'");
}

// A problem document stands in for its state.
PiecewiseLinearState read_state(const std::string& path, std::istream& in) {
  Document doc = read_document(path, in);
  if (auto* s = std::get_if<PiecewiseLinearState>(&doc.payload)) return *s;
  if (auto* p = std::get_if<Problem>(&doc.payload)) return p->state;
  wrong_kind(path, doc, "state or problem");
}

// A problem document stands in for its solution.
DeltaPotential read_potential(const std::string& path, std::istream& in) {
  Document doc = read_document(path, in);
  if (auto* s = std::get_if<DeltaPotential>(&doc.payload)) return *s;
  if (auto* p = std::get_if<Problem>(&doc.payload)) return p->solution;
  wrong_kind(path, doc, "potential or problem");
}

Problem read_problem(const std::string& path, std::istream& in) {
  Document doc = read_document(path, in);
  if (auto* p = std::get_if<Problem>(&doc.payload)) return *p;
  wrong_kind(path, doc, "problem");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-energy eigenstates of an infinite well with delta spikes", "zerowell"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int kinks = 0;
  std::int64_t denom_bound = 0;
  std::string out_path = "-";
  auto* generate_cmd = app.add_subcommand("generate", "Generate a random Jeopardy problem");
  generate_cmd->add_option("--seed", seed, "64-bit seed")->required();
  generate_cmd->add_option("--kinks", kinks, "Number of kinks (1-8)")->required();
  generate_cmd->add_option("--denom-bound", denom_bound, "Largest denominator on the worksheet grid")->required();
  generate_cmd->add_option("--out", out_path, "Output file ('-' for stdout)");

  std::string state_path;
  auto* invert_cmd = app.add_subcommand("invert", "Find the delta potential behind a zero-energy state");
  invert_cmd->add_option("--state", state_path, "State or problem document")->required();

  std::string potential_path;
  auto* forward_cmd = app.add_subcommand("forward", "Build the zero-energy state of a delta potential");
  forward_cmd->add_option("--potential", potential_path, "Potential or problem document")->required();

  auto* expect_cmd = app.add_subcommand("expect", "Kinetic and potential energy expectation values");
  expect_cmd->add_option("--state", state_path, "State document (normalized before use)")->required();
  expect_cmd->add_option("--potential", potential_path, "Potential document")->required();

  ScanOptions scan{};
  std::optional<double> emin;
  std::optional<double> emax;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Find eigenvalues by shooting");
  spectrum_cmd->add_option("--potential", potential_path, "Potential or problem document")->required();
  spectrum_cmd->add_option("--emin", emin, "Lower end of the energy scan");
  spectrum_cmd->add_option("--emax", emax, "Upper end of the energy scan");
  spectrum_cmd->add_option("--grid", scan.grid_n, "Scan grid points")->capture_default_str();
  spectrum_cmd->add_option("--tol", scan.tol, "Bisection tolerance")->capture_default_str();

  std::string problem_path;
  std::string answer_path;
  double rel_tol = 1e-6;
  std::string pos_tol_text = "0";
  auto* grade_cmd = app.add_subcommand("grade", "Grade a proposed potential against a problem");
  grade_cmd->add_option("--problem", problem_path, "Problem document")->required();
  grade_cmd->add_option("--answer", answer_path, "Proposed potential document")->required();
  grade_cmd->add_option("--rel-tol", rel_tol, "Relative coefficient tolerance")->capture_default_str();
  grade_cmd->add_option("--pos-tol", pos_tol_text, "Position tolerance (rational or decimal)")->capture_default_str();

  std::string in_path;
  std::string format;
  std::size_t level = 0;
  auto* plot_cmd = app.add_subcommand("plot", "Emit plot data for a state, problem or spectrum");
  plot_cmd->add_option("--in", in_path, "Input document")->required();
  plot_cmd->add_option("--format", format, "csv or svg")->required()->check(CLI::IsMember({"csv", "svg"}));
  plot_cmd->add_option("--out", out_path, "Output file ('-' for stdout)")->required();
  plot_cmd->add_option("--level", level, "Spectrum level to plot (0 = lowest)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "zerowell: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*generate_cmd) {
      const Problem p = generate(seed, kinks, denom_bound);
      write_text(out_path, render(Document{p}), out);
    } else if (*invert_cmd) {
      write_text("-", render(Document{invert(read_state(state_path, in))}), out);
    } else if (*forward_cmd) {
      const auto state = forward_construct(read_potential(potential_path, in));
      if (!state) {
        err << "zerowell: no zero-energy eigenstate for this potential\n";
        return kDomainError;
      }
      write_text("-", render(Document{*state}), out);
    } else if (*expect_cmd) {
      const auto state = read_state(state_path, in);
      const auto potential = read_potential(potential_path, in);
      write_text("-", render(Document{expectations(normalize(state).state, potential)}), out);
    } else if (*spectrum_cmd) {
      const auto potential = read_potential(potential_path, in);
      const ScanOptions defaults = default_scan(potential.config());
      scan.e_min = emin.value_or(defaults.e_min);
      scan.e_max = emax.value_or(defaults.e_max);
      auto result = find_eigenvalues(potential, scan);
      for (const auto& f : result.failures) {
        err << "zerowell: bisection did not converge in [" << f.lo << ", " << f.hi << "]\n";
      }
      write_text("-", render(Document{std::move(result)}), out);
    } else if (*grade_cmd) {
      Scalar pos_tol;
      try {
        pos_tol = Scalar(Rational::parse(pos_tol_text));
      } catch (const ParseError&) {
        try {
          pos_tol = Scalar(std::stod(pos_tol_text));
        } catch (const std::exception&) {
          err << "zerowell: --pos-tol: not a number '" << pos_tol_text << "'\n";
          return kUsageError;
        }
      }
      const auto problem = read_problem(problem_path, in);
      const auto answer = read_potential(answer_path, in);
      write_text("-", render(Document{grade(problem, answer, rel_tol, pos_tol)}), out);
    } else if (*plot_cmd) {
      const Document doc = read_document(in_path, in);
      PlotData data = std::visit(
          [&](const auto& payload) -> PlotData {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, PiecewiseLinearState> || std::is_same_v<T, Problem>) {
              return plot_data(payload);
            } else if constexpr (std::is_same_v<T, SpectrumResult>) {
              return plot_data(payload, level);
            } else if constexpr (std::is_same_v<T, DeltaPotential>) {
              const auto state = forward_construct(payload);
              if (!state) throw DomainError("no zero-energy eigenstate for this potential");
              PlotData d = plot_data(*state);
              d.markers.clear();
              for (const auto& s : payload.spikes()) d.markers.push_back(s.x.to_double());
              return d;
            } else {
              throw ValidationError(in_path + ": cannot plot a " + std::string(kind_name(doc.kind())) + " document");
            }
          },
          doc.payload);
      const PlotFormat fmt = format == "csv" ? PlotFormat::kCsv : PlotFormat::kSvg;
      if (out_path == "-") {
        write_text("-", fmt == PlotFormat::kCsv ? render_csv(data) : render_svg(data), out);
      } else {
        emit_plot(data, fmt, out_path);
      }
    }
  } catch (const IoError& e) {
    err << "zerowell: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "zerowell: " << e.what() << "\n";
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace zerowell::cli
