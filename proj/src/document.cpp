#include "zerowell/document.hpp"

#include <cmath>
#include <initializer_list>
#include <optional>
#include <set>

#include "json.hpp"

#include "zerowell/errors.hpp"

namespace zerowell {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rendering

json to_json(const Scalar& s) {
  if (s.is_exact()) return s.exact().to_string();
  return s.to_double();
}

json wall_json(const WellConfig& cfg) { return json::array({to_json(cfg.a()), to_json(cfg.b())}); }

json knots_json(const PiecewiseLinearState& state) {
  json out = json::array();
  for (const auto& k : state.knots()) out.push_back(json::array({to_json(k.x), to_json(k.psi)}));
  return out;
}

json spike_json(const DeltaSpike& s) {
  json out = json::object();
  out["x"] = to_json(s.x);
  out["c"] = to_json(s.c);
  return out;
}

json spikes_json(const std::vector<DeltaSpike>& spikes) {
  json out = json::array();
  for (const auto& s : spikes) out.push_back(spike_json(s));
  return out;
}

json payload_json(const PiecewiseLinearState& state) {
  json out = json::object();
  out["wall"] = wall_json(state.config());
  out["gamma"] = to_json(state.config().gamma());
  out["knots"] = knots_json(state);
  return out;
}

json payload_json(const DeltaPotential& potential) {
  json out = json::object();
  out["wall"] = wall_json(potential.config());
  out["gamma"] = to_json(potential.config().gamma());
  out["spikes"] = spikes_json(potential.spikes());
  return out;
}

json payload_json(const Problem& p) {
  json out = json::object();
  out["id"] = p.id;
  out["wall"] = wall_json(p.config());
  out["gamma"] = to_json(p.config().gamma());
  json diff = json::object();
  diff["kinks"] = p.difficulty.kinks;
  diff["denom_bound"] = p.difficulty.denom_bound;
  out["difficulty"] = diff;
  out["knots"] = knots_json(p.state);
  out["spikes"] = spikes_json(p.solution.spikes());
  return out;
}

json payload_json(const SpectrumResult& r) {
  json out = payload_json(r.potential);
  json scan = json::object();
  scan["emin"] = r.scan.e_min;
  scan["emax"] = r.scan.e_max;
  scan["grid"] = r.scan.grid_n;
  scan["tol"] = r.scan.tol;
  scan["max_bisections"] = r.scan.max_bisections;
  scan["node_intervals"] = r.scan.node_intervals;
  out["scan"] = scan;
  json levels = json::array();
  for (const auto& e : r.eigenvalues) {
    json level = json::object();
    level["E"] = e.energy;
    level["nodes"] = e.nodes;
    level["residual"] = e.residual;
    json samples = json::array();
    for (const auto& s : e.samples) samples.push_back(json::array({s.x, s.psi}));
    level["samples"] = std::move(samples);
    levels.push_back(std::move(level));
  }
  out["eigenvalues"] = std::move(levels);
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item = json::object();
    item["lo"] = f.lo;
    item["hi"] = f.hi;
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  return out;
}

json payload_json(const GradeReport& g) {
  json out = json::object();
  out["verdict"] = g.pass ? "pass" : "fail";
  out["rel_tol"] = g.rel_tol;
  out["pos_tol"] = to_json(g.pos_tol);
  json per = json::array();
  for (const auto& s : g.per_spike) {
    json item = json::object();
    item["x"] = to_json(s.x);
    item["matched"] = s.matched;
    item["expected_c"] = to_json(s.expected_c);
    item["proposed_c"] = s.proposed_c ? to_json(*s.proposed_c) : json(nullptr);
    item["rel_error"] = s.rel_error ? json(*s.rel_error) : json(nullptr);
    per.push_back(std::move(item));
  }
  out["per_spike"] = std::move(per);
  out["extras"] = spikes_json(g.extras);
  out["missing"] = spikes_json(g.missing);
  return out;
}

json payload_json(const EnergyReport& e) {
  json out = json::object();
  out["t"] = to_json(e.t_expect);
  out["v"] = to_json(e.v_expect);
  out["e"] = to_json(e.e_expect);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

// A JSON value together with its JSON pointer, so every error can say where.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("at " + (path_.empty() ? std::string("/") : path_) + ": " + what);
  }

  const json& raw() const { return value_; }
  const std::string& path() const { return path_; }

  // Requires an object with exactly these keys.
  void expect_object(std::initializer_list<std::string_view> keys) const {
    if (!value_.is_object()) fail("expected an object");
    for (auto k : keys) {
      if (!value_.contains(std::string(k))) fail("missing field '" + std::string(k) + "'");
    }
    for (const auto& item : value_.items()) {
      bool known = false;
      for (auto k : keys) known = known || item.key() == k;
      if (!known) fail("unknown field '" + item.key() + "'");
    }
  }

  Node operator[](std::string_view key) const {
    return Node(value_.at(std::string(key)), path_ + "/" + std::string(key));
  }

  std::vector<Node> elements(std::optional<std::size_t> exact_size = std::nullopt) const {
    if (!value_.is_array()) fail("expected an array");
    if (exact_size && value_.size() != *exact_size) fail("expected " + std::to_string(*exact_size) + " elements");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_.size(); ++i) out.emplace_back(value_[i], path_ + "/" + std::to_string(i));
    return out;
  }

  Scalar scalar() const {
    if (value_.is_string()) {
      try {
        return Scalar(Rational::parse(value_.get<std::string>()));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (value_.is_number()) return Scalar(number());
    fail("expected a rational string or a number");
  }

  double number() const {
    if (!value_.is_number()) fail("expected a number");
    const double d = value_.get<double>();
    if (!std::isfinite(d)) fail("number is not finite");
    return d;
  }

  std::int64_t integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    return value_.get<std::int64_t>();
  }

  std::size_t count() const {
    if (!value_.is_number_unsigned()) fail("expected a non-negative integer");
    return value_.get<std::size_t>();
  }

  bool boolean() const {
    if (!value_.is_boolean()) fail("expected true or false");
    return value_.get<bool>();
  }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

 private:
  const json& value_;
  std::string path_;
};

// Turns construction-time validation failures into located parse errors.
template <class F>
auto located(const Node& at, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ValidationError& e) {
    at.fail(e.what());
  }
}

WellConfig parse_well(const Node& obj) {
  const auto wall = obj["wall"].elements(2);
  return located(obj, [&] { return WellConfig(wall[0].scalar(), wall[1].scalar(), obj["gamma"].scalar()); });
}

std::vector<Knot> parse_knots(const Node& arr) {
  std::vector<Knot> knots;
  for (const auto& item : arr.elements()) {
    const auto pair = item.elements(2);
    knots.push_back({pair[0].scalar(), pair[1].scalar()});
  }
  return knots;
}

DeltaSpike parse_spike(const Node& obj) {
  obj.expect_object({"x", "c"});
  return {obj["x"].scalar(), obj["c"].scalar()};
}

std::vector<DeltaSpike> parse_spikes(const Node& arr) {
  std::vector<DeltaSpike> out;
  for (const auto& item : arr.elements()) out.push_back(parse_spike(item));
  return out;
}

PiecewiseLinearState parse_state(const Node& obj) {
  obj.expect_object({"wall", "gamma", "knots"});
  WellConfig cfg = parse_well(obj);
  auto knots = parse_knots(obj["knots"]);
  return located(obj["knots"], [&] { return PiecewiseLinearState(std::move(knots), cfg); });
}

DeltaPotential parse_potential_fields(const Node& obj) {
  WellConfig cfg = parse_well(obj);
  auto spikes = parse_spikes(obj["spikes"]);
  return located(obj["spikes"], [&] { return DeltaPotential(std::move(spikes), cfg); });
}

DeltaPotential parse_potential(const Node& obj) {
  obj.expect_object({"wall", "gamma", "spikes"});
  return parse_potential_fields(obj);
}

Problem parse_problem(const Node& obj) {
  obj.expect_object({"id", "wall", "gamma", "difficulty", "knots", "spikes"});
  WellConfig cfg = parse_well(obj);
  const Node diff = obj["difficulty"];
  diff.expect_object({"kinks", "denom_bound"});
  const auto kinks = diff["kinks"].integer();
  if (kinks < 1 || kinks > kMaxKinks) diff["kinks"].fail("kinks out of range");
  Difficulty difficulty{int(kinks), diff["denom_bound"].integer()};
  auto knots = parse_knots(obj["knots"]);
  PiecewiseLinearState state = located(obj["knots"], [&] { return PiecewiseLinearState(std::move(knots), cfg); });
  auto spikes = parse_spikes(obj["spikes"]);
  DeltaPotential solution = located(obj["spikes"], [&] { return DeltaPotential(std::move(spikes), cfg); });
  Problem p{obj["id"].string(), std::move(state), std::move(solution), difficulty};
  located(obj, [&] {
    check_problem(p);
    return 0;
  });
  return p;
}

SpectrumResult parse_spectrum(const Node& obj) {
  obj.expect_object({"wall", "gamma", "spikes", "scan", "eigenvalues", "failures"});
  DeltaPotential potential = parse_potential_fields(obj);
  const Node scan = obj["scan"];
  scan.expect_object({"emin", "emax", "grid", "tol", "max_bisections", "node_intervals"});
  ScanOptions options{scan["emin"].number(), scan["emax"].number(), scan["grid"].count(), scan["tol"].number(),
                      scan["max_bisections"].count(), scan["node_intervals"].count()};
  SpectrumResult result{std::move(potential), options, {}, {}};
  for (const auto& level : obj["eigenvalues"].elements()) {
    level.expect_object({"E", "nodes", "residual", "samples"});
    Eigenpair e{level["E"].number(), int(level["nodes"].count()), level["residual"].number(), {}};
    for (const auto& s : level["samples"].elements()) {
      const auto xy = s.elements(2);
      e.samples.push_back({xy[0].number(), xy[1].number()});
    }
    if (!result.eigenvalues.empty() && !(result.eigenvalues.back().energy < e.energy)) {
      level["E"].fail("eigenvalues must be strictly increasing");
    }
    result.eigenvalues.push_back(std::move(e));
  }
  for (const auto& f : obj["failures"].elements()) {
    f.expect_object({"lo", "hi"});
    result.failures.push_back({f["lo"].number(), f["hi"].number()});
  }
  return result;
}

GradeReport parse_grade(const Node& obj) {
  obj.expect_object({"verdict", "rel_tol", "pos_tol", "per_spike", "extras", "missing"});
  const std::string verdict = obj["verdict"].string();
  if (verdict != "pass" && verdict != "fail") obj["verdict"].fail("verdict must be 'pass' or 'fail'");
  GradeReport g{verdict == "pass", obj["rel_tol"].number(), obj["pos_tol"].scalar(), {}, {}, {}};
  bool all_within = true;
  for (const auto& item : obj["per_spike"].elements()) {
    item.expect_object({"x", "matched", "expected_c", "proposed_c", "rel_error"});
    SpikeGrade s{item["x"].scalar(), item["matched"].boolean(), item["expected_c"].scalar(), std::nullopt, std::nullopt};
    if (!item["proposed_c"].raw().is_null()) s.proposed_c = item["proposed_c"].scalar();
    if (!item["rel_error"].raw().is_null()) s.rel_error = item["rel_error"].number();
    if (s.matched != s.proposed_c.has_value() || s.matched != s.rel_error.has_value()) {
      item.fail("matched spikes carry proposed_c and rel_error, unmatched ones carry null");
    }
    if (s.rel_error && !(*s.rel_error <= g.rel_tol)) all_within = false;
    g.per_spike.push_back(std::move(s));
  }
  g.extras = parse_spikes(obj["extras"]);
  g.missing = parse_spikes(obj["missing"]);
  if (g.pass != (all_within && g.extras.empty() && g.missing.empty())) {
    obj["verdict"].fail("verdict disagrees with the per-spike results");
  }
  return g;
}

EnergyReport parse_energy(const Node& obj) {
  obj.expect_object({"t", "v", "e"});
  EnergyReport r{obj["t"].scalar(), obj["v"].scalar(), obj["e"].scalar()};
  if (!(r.t_expect + r.v_expect == r.e_expect)) obj["e"].fail("e must equal t + v");
  return r;
}

}  // namespace

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kProblem: return "problem";
    case DocumentKind::kState: return "state";
    case DocumentKind::kPotential: return "potential";
    case DocumentKind::kSpectrum: return "spectrum";
    case DocumentKind::kGradeReport: return "grade-report";
    case DocumentKind::kEnergyReport: return "energy-report";
  }
  return "unknown";
}

DocumentKind Document::kind() const { return DocumentKind(payload.index()); }

std::string render(const Document& doc) {
  json out = json::object();
  out["kind"] = std::string(kind_name(doc.kind()));
  out["version"] = std::string(kSchemaVersion);
  out["payload"] = std::visit([](const auto& p) { return payload_json(p); }, doc.payload);
  return out.dump() + "\n";
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const Node top(root, "");
  top.expect_object({"kind", "version", "payload"});
  if (top["version"].string() != kSchemaVersion) top["version"].fail("unsupported schema version");
  const std::string kind = top["kind"].string();
  const Node payload = top["payload"];
  if (kind == "problem") return {parse_problem(payload)};
  if (kind == "state") return {parse_state(payload)};
  if (kind == "potential") return {parse_potential(payload)};
  if (kind == "spectrum") return {parse_spectrum(payload)};
  if (kind == "grade-report") return {parse_grade(payload)};
  if (kind == "energy-report") return {parse_energy(payload)};
  top["kind"].fail("unknown document kind '" + kind + "'");
}

}  // namespace zerowell
