// hirota: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 singular orbit, 3 mismatch, 4 numeric failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "io.hpp"

using namespace hirota;
using io::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSingular = 2, kMismatch = 3, kNumeric = 4 };

struct Common {
  std::string format = "json";
  std::string out;
  unsigned digits = kDefaultDigits;
  std::uint64_t seed = 1;
};

// Result of a subcommand: text to emit and the exit code.
struct Outcome {
  std::string text;
  int code = kOk;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

unsigned default_digits() {
  if (const char* env = std::getenv("HM_PRECISION")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InvalidArgument("HM_PRECISION must be a positive integer");
    }
  }
  return kDefaultDigits;
}

void add_common(CLI::App* cmd, Common& c, bool formats = true) {
  if (formats) cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "write to this file instead of stdout");
  cmd->add_option("--digits", c.digits, "working precision in decimal digits");
  cmd->add_option("--seed", c.seed, "random seed");
}

Outcome cmd_orbit(const Common& c, const std::string& map, const std::string& x, int steps, bool backward) {
  if (steps < 0) throw InvalidArgument("--steps must be nonnegative");
  MapKind kind = parse_map_kind(map);
  auto x0 = io::parse_state(x);
  auto orb = orbit(kind, x0, steps, backward ? Direction::Backward : Direction::Forward);
  Outcome out{c.format == "csv" ? io::orbit_csv(kind, orb) : dump(io::orbit_json(kind, orb)), kOk};
  if (orb.hit) {
    std::cerr << "singular hit at step " << orb.hit->step << " (denominator " << orb.hit->denominator << ")\n";
    out.code = kSingular;
  }
  return out;
}

Outcome cmd_confine(const Common& c, const std::string& map, int steps) {
  if (steps < 3) throw InvalidArgument("--steps must be at least 3");
  auto rep = confinement_run(parse_map_kind(map), steps);
  if (c.format == "json") return {dump(io::confinement_json(rep))};
  std::string text = "t,x1,x2,x3\n";
  for (std::size_t t = 0; t < rep.states.size(); ++t) {
    text += std::to_string(t);
    for (const auto& v : rep.states[t].x) text += ",\"" + (v ? format_ratfunc(*v) : std::string("inf")) + "\"";
    text += "\n";
  }
  return {text};
}

Outcome cmd_ivpp(const Common& c, const std::string& map, int tmax, bool golden) {
  if (tmax < 2) throw InvalidArgument("--tmax must be at least 2");
  auto table = extract_factors(parse_map_kind(map), tmax);
  Json j = io::ivpp_json(table);
  int code = kOk;
  if (golden) {
    Json rows = Json::array();
    for (const auto& row : io::golden_compare(table)) {
      rows.push_back({{"t", row.t}, {"factor", row.factor}, {"match", row.match}});
      if (!row.match) code = kMismatch;
    }
    j["golden"] = rows;
  }
  if (c.format == "json") return {dump(j), code};
  std::string text = "t,gamma,alpha,beta\n";
  for (const auto& [t, e] : table.entries())
    text += std::to_string(t) + ",\"" + format_poly(e.gamma) + "\",\"" + format_poly(e.alpha) + "\",\"" +
            format_poly(e.beta) + "\"\n";
  return {text, code};
}

Outcome cmd_periodic(const Common& c, int period, int samples, const std::string& gamma_text, const std::string& tol,
                     const std::string& separation) {
  if (period < 2) throw InvalidArgument("--period must be at least 2");
  if (samples < 1) throw InvalidArgument("--samples must be positive");
  MultiPoly gamma = gamma_text.empty() ? extract_factors(MapKind::LV, period).gamma(period) : parse_poly(gamma_text);
  auto rep = periodicity_check(gamma, period, samples, c.digits, c.seed);
  PrecisionScope scope(c.digits);
  bool passed;
  try {
    passed = rep.passed(BigFloat(tol), BigFloat(separation));
  } catch (const std::runtime_error&) {
    throw InvalidArgument("--tol and --separation must be decimal numbers");
  }
  return {dump(io::periodicity_json(rep, format_poly(gamma), passed)), passed ? kOk : kMismatch};
}

Coefficients coefficients_or_default(const std::string& z) {
  return Coefficients(z.empty() ? std::array<Rational, 4>{0, 1, 2, 3} : io::parse_z(z));
}

io::FieldFile read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw InvalidArgument(std::string("bad JSON in ") + path + ": " + e.what());
  }
  try {
    return io::tau_field_from_json(j);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad tau field in ") + path + ": " + e.what());
  }
}

Outcome cmd_lattice(const Common& c, const std::string& in, int patch, const std::string& z) {
  std::optional<io::FieldFile> file;
  if (!in.empty()) file = read_field(in);
  else if (patch < 1) throw InvalidArgument("--patch must be at least 1");
  Coefficients coef = file ? file->coefficients : coefficients_or_default(z);
  TauField field = file ? file->field : TauField::constant(Patch::cube(-patch, patch), 1);
  auto rows = io::residual_rows(field, coef);
  if (c.format == "csv") return {"p1,p2,p3,p4,residual\n" + io::residual_csv_rows(rows)};
  Json octahedra = Json::array();
  int nonzero = 0;
  for (const auto& r : rows) {
    octahedra.push_back(
        {{"p", r.p.p}, {"residual", r.residual.str()}, {"pfaffian", r.pfaffian.str()}, {"det", r.det.str()}});
    nonzero += r.residual != 0;
  }
  return {dump(Json{{"octahedra", octahedra}, {"nonzero_residuals", nonzero}})};
}

Outcome cmd_backlund(const Common& c, const std::string& in, int patch, int chain, const std::string& z,
                     bool fields) {
  if (chain < 1) throw InvalidArgument("--chain must be at least 1");
  std::optional<io::FieldFile> file;
  if (!in.empty()) file = read_field(in);
  else if (patch < 1) throw InvalidArgument("--patch must be at least 1");
  Coefficients coef = file ? file->coefficients : coefficients_or_default(z);
  TauField tau0 = file ? file->field : TauField::constant(Patch::cube(-patch, patch), 1);
  auto stages = backlund_chain(tau0, coef, tau0.patch(), chain, c.seed);

  int code = kOk;
  Json out{{"seed", c.seed}, {"stages", Json::array()}};
  std::string csv = "stage,p1,p2,p3,p4,residual\n";
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& st = stages[k];
    auto rows = io::residual_rows(st.field, coef);
    int nonzero = 0;
    for (const auto& r : rows) nonzero += r.residual != 0;
    if (nonzero) code = kMismatch;
    csv += io::residual_csv_rows(rows, std::to_string(k + 1) + ",");
    const Patch& p = st.field.patch();
    Json stage{{"stage", k + 1},
               {"patch", {{"lo", p.lo}, {"hi", p.hi}, {"levels", {p.level_lo, p.level_hi}}}},
               {"null_space_dim", st.null_space_dim},
               {"unknowns", st.unknowns},
               {"interior_octahedra", rows.size()},
               {"nonzero_residuals", nonzero}};
    if (fields) stage["field"] = io::tau_field_json(st.field, coef);
    out["stages"].push_back(stage);
  }
  return {c.format == "csv" ? csv : dump(out), code};
}

Outcome cmd_flow(const std::string& action, const std::string& from, const std::string& to,
                 const std::string& orientation) {
  Orientation o = orientation == "formula" ? Orientation::Formula : Orientation::Textual;
  if (action == "templates") {
    Json rows = Json::array();
    for (const auto& tpl : route_templates()) {
      auto check = check_template(tpl, o);
      Json steps = Json::array();
      for (auto k : check.steps) steps.push_back(step_kind_name(k));
      rows.push_back({{"route", tpl.labels}, {"steps", steps}, {"shift", check.total}, {"present", check.present()}});
    }
    return {dump(Json{{"orientation", orientation}, {"templates", rows}})};
  }
  if (from.empty() || to.empty()) throw InvalidArgument("flow " + action + " needs --from and --to");
  Corner a = Corner::parse(from), b = Corner::parse(to);
  if (action == "allowed") {
    try {
      return {dump(Json{{"from", a.str()}, {"to", b.str()}, {"orientation", orientation}, {"allowed", allowed(a, b, o)}})};
    } catch (const NotAnEdge& e) {
      throw InvalidArgument(e.what());
    }
  }
  if (action == "morphism") {
    if (a == b) throw InvalidArgument("morphism needs two different corners");
    return {dump(Json{{"from", a.str()}, {"to", b.str()}, {"shift", morphism(a, b)}})};
  }
  Json paths = Json::array();
  for (const auto& r : routes(a, b, o)) paths.push_back({{"path", io::corner_path_json(r)}, {"shift", compose(r)}});
  return {dump(Json{{"from", a.str()}, {"to", b.str()}, {"orientation", orientation}, {"routes", paths}})};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity confinement, IVPPs and Hirota-Miwa lattice tools"};
  app.require_subcommand(1);
  Common common;
  std::function<Outcome()> run;

  std::string map = "lv", x, z, in, gamma, action, from, to, orientation = "textual";
  int steps = 10, tmax = 5, period = 2, samples = 20, patch = 2, chain = 1;
  bool backward = false, golden = false, fields = false;
  std::string tol = "1e-40", separation = "1e-3";

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate a map on a rational state");
  orbit_cmd->add_option("--map", map)->check(CLI::IsMember({"lv", "kdv"}));
  orbit_cmd->add_option("--x", x, "initial state a,b,c")->required();
  orbit_cmd->add_option("--steps", steps);
  orbit_cmd->add_flag("--backward", backward, "iterate the inverse map");
  add_common(orbit_cmd, common);
  orbit_cmd->callback([&] { run = [&] { return cmd_orbit(common, map, x, steps, backward); }; });

  auto* confine_cmd = app.add_subcommand("confine", "pass the singularity symbolically from the seed");
  confine_cmd->add_option("--map", map)->check(CLI::IsMember({"lv", "kdv"}));
  confine_cmd->add_option("--steps", steps);
  add_common(confine_cmd, common);
  confine_cmd->callback([&] { run = [&] { return cmd_confine(common, map, steps); }; });

  auto* ivpp_cmd = app.add_subcommand("ivpp", "extract the gamma/alpha/beta table");
  ivpp_cmd->add_option("--map", map)->check(CLI::IsMember({"lv", "kdv"}));
  ivpp_cmd->add_option("--tmax", tmax);
  ivpp_cmd->add_flag("--golden", golden, "compare with the published table");
  add_common(ivpp_cmd, common);
  ivpp_cmd->callback([&] { run = [&] { return cmd_ivpp(common, map, tmax, golden); }; });

  auto* periodic_cmd = app.add_subcommand("periodic", "check periodicity on gamma(t) = 0");
  periodic_cmd->add_option("--period", period)->required();
  periodic_cmd->add_option("--samples", samples);
  periodic_cmd->add_option("--gamma", gamma, "polynomial in r, s (default: extracted gamma(t))");
  periodic_cmd->add_option("--tol", tol, "return tolerance");
  periodic_cmd->add_option("--separation", separation, "minimum distance after t' < t, t' not dividing t");
  add_common(periodic_cmd, common, false);
  periodic_cmd->callback([&] { run = [&] { return cmd_periodic(common, period, samples, gamma, tol, separation); }; });

  auto* lattice_cmd = app.add_subcommand("lattice", "HM residuals, Pfaffians and determinants of a tau field");
  lattice_cmd->add_option("--in", in, "tau field JSON (default: tau = 1)");
  lattice_cmd->add_option("--patch", patch, "half width of the default box");
  lattice_cmd->add_option("--z", z, "z1,z2,z3,z4 for the default field");
  add_common(lattice_cmd, common);
  lattice_cmd->callback([&] { run = [&] { return cmd_lattice(common, in, patch, z); }; });

  auto* backlund_cmd = app.add_subcommand("backlund", "chain of Baecklund transformations");
  backlund_cmd->add_option("--in", in, "seed tau field JSON (default: tau = 1)");
  backlund_cmd->add_option("--patch", patch, "half width of the default box");
  backlund_cmd->add_option("--chain", chain, "number of stages");
  backlund_cmd->add_option("--z", z, "z1,z2,z3,z4 for the default field");
  backlund_cmd->add_flag("--fields", fields, "include the stage fields");
  add_common(backlund_cmd, common);
  backlund_cmd->callback([&] { run = [&] { return cmd_backlund(common, in, patch, chain, z, fields); }; });

  auto* flow_cmd = app.add_subcommand("flow", "octahedron flow rule");
  flow_cmd->add_option("action", action)->required()->check(CLI::IsMember({"allowed", "morphism", "routes", "templates"}));
  flow_cmd->add_option("--from", from);
  flow_cmd->add_option("--to", to);
  flow_cmd->add_option("--orientation", orientation)->check(CLI::IsMember({"textual", "formula"}));
  flow_cmd->add_option("--out", common.out);
  flow_cmd->callback([&] { run = [&] { return cmd_flow(action, from, to, orientation); }; });

  try {
    common.digits = default_digits();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  Outcome outcome;
  try {
    if (common.digits < 16) throw InvalidArgument("precision must be at least 16 digits");
    outcome = run();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PatchTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OutOfPatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SingularHit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const ExtractionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }

  if (common.out.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream file(common.out);
    if (!file) {
      std::cerr << "error: cannot write " << common.out << "\n";
      return kUsage;
    }
    file << outcome.text;
  }
  return outcome.code;
}
