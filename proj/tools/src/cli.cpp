#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "berezin/analysis.hpp"
#include "berezin/closed_form.hpp"
#include "berezin/inequality.hpp"
#include "berezin/io.hpp"
#include "berezin/matrix_oracle.hpp"
#include "verify.hpp"

namespace berezin::cli {

namespace {

namespace fs = std::filesystem;

// Bad user input; reported with exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridArgs {
  std::size_t r_steps = kDefaultRadii;
  std::size_t theta_steps = kDefaultAngles;
  double r_max = kDefaultRMax;
};

struct SymbolArgs {
  std::string kind = "elliptic";
  std::string alpha = "0";
  std::string a = "1";
  std::string b = "0";
};

struct RangeArgs {
  std::string space = "hardy";
  int model_n = 2;
  SymbolArgs symbol;
  GridArgs grid;
  double tol = kDefaultRelativeTolerance;
  std::string out_prefix;
  std::string csv, json, svg;
};

struct SweepArgs {
  std::string space = "hardy";
  std::string family = "elliptic";
  std::string alphas;
  int lattice_radii = 4;
  int lattice_angles = 8;
  int circle_points = 16;
  GridArgs grid{0, 0, kDefaultRMax};  // zero: keep the sweep grid's value
  std::string json;
};

struct IneqArgs {
  std::string function = "power:2";
  std::string map = "identity";
  std::string check = "all";
  int trials = 100;
  int dim = 0;
  int dim_min = 2;
  int dim_max = 8;
  std::uint64_t seed = 42;
  bool diag_only = false;
  std::string json;
};

struct VerifyArgs {
  std::string suite;
  std::string json;
};

Complex parse_param(const std::string& text, const char* what) {
  try {
    return parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

SpaceSpec parse_space(const std::string& name, int model_n, bool allow_model) {
  if (name == "hardy") return SpaceSpec::hardy();
  if (name == "bergman") return SpaceSpec::bergman();
  if (name == "model" && allow_model) {
    if (model_n < 1) throw InvalidInput("--n must be >= 1");
    return SpaceSpec::model(model_n);
  }
  throw InvalidInput("unsupported space '" + name + "'");
}

Symbol build_symbol(const SymbolArgs& s) {
  try {
    if (s.kind == "elliptic") return Symbol::elliptic(parse_param(s.alpha, "--alpha"));
    if (s.kind == "blaschke") return Symbol::blaschke(parse_param(s.alpha, "--alpha"));
    if (s.kind == "automorphism") {
      return Symbol::automorphism(parse_param(s.a, "--a"), parse_param(s.b, "--b"));
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  throw InvalidInput("unknown symbol '" + s.kind + "'");
}

PolarGrid build_grid(const GridArgs& g) {
  try {
    return PolarGrid::uniform_r2(g.r_steps, g.theta_steps, g.r_max);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

void require_writable(const std::string& path) {
  if (path.empty()) return;
  const fs::path p(path);
  fs::path dir = p.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  if (!fs::is_directory(dir, ec) || ::access(dir.c_str(), W_OK) != 0) {
    throw IoError("cannot write " + path + ": directory not writable");
  }
  if (fs::is_directory(p, ec)) throw IoError("cannot write " + path + ": is a directory");
  if (fs::exists(p, ec) && ::access(p.c_str(), W_OK) != 0) {
    throw IoError("cannot write " + path + ": permission denied");
  }
}

void add_grid_options(CLI::App* cmd, GridArgs& g) {
  cmd->add_option("--r-steps", g.r_steps, "Radii, uniform in r^2")->check(CLI::PositiveNumber);
  cmd->add_option("--theta-steps", g.theta_steps, "Angles")->check(CLI::PositiveNumber);
  cmd->add_option("--r-max", g.r_max, "Largest radius, < 1");
}

int cmd_range(const RangeArgs& args, std::ostream& out) {
  const SpaceSpec space = parse_space(args.space, args.model_n, true);
  const PolarGrid grid = build_grid(args.grid);
  if (!(args.tol > 0.0)) throw InvalidInput("--tol must be positive");

  std::string csv = args.csv, json = args.json, svg = args.svg;
  if (!args.out_prefix.empty()) {
    if (csv.empty()) csv = args.out_prefix + ".csv";
    if (json.empty()) json = args.out_prefix + ".json";
    if (svg.empty()) svg = args.out_prefix + ".svg";
  }
  for (const auto* p : {&csv, &json, &svg}) require_writable(*p);

  std::optional<Symbol> symbol;
  RangeSample sample;
  if (space.kind == SpaceSpec::Kind::Model) {
    sample = model_berezin_range(space.model_n, grid);
  } else {
    symbol = build_symbol(args.symbol);
    sample = sample_range(space, *symbol, grid);
  }
  const ConvexityReport report = range_report(sample, args.tol);
  nlohmann::json j = to_json(report);
  j["space"] = space.name();
  j["symbol"] = symbol ? symbol->describe() : "model-operator";
  j["grid"] = {{"r_steps", grid.r_values.size()},
               {"theta_steps", grid.theta_values.size()},
               {"r_max", grid.r_max()}};
  j["berezin_number"] = sample.max_modulus();

  const std::string title = space.name() + " " + (symbol ? symbol->describe() : "model operator") +
                            ": " + std::string(to_string(report.verdict));
  if (!csv.empty()) write_file_atomic(csv, range_csv(sample));
  if (!svg.empty()) write_file_atomic(svg, range_svg(sample, report.shape.hull, title));
  if (!json.empty()) write_file_atomic(json, dump(j));

  if (csv.empty() && json.empty() && svg.empty()) {
    out << dump(j);
  } else {
    out << "verdict " << to_string(report.verdict) << " shape " << to_string(report.shape.tag)
        << " coverage " << format_double(report.coverage_ratio) << " max_gap "
        << format_double(report.max_gap) << "\n";
  }
  return kExitOk;
}

std::vector<Complex> parse_alpha_list(const std::string& text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    if (item.find_first_not_of(" \t") == std::string::npos) throw InvalidInput("empty entry in --alphas");
    out.push_back(parse_param(item, "--alphas"));
    start = end + 1;
  }
  return out;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  const SpaceSpec space = parse_space(args.space, 0, false);
  SweepFamily family;
  if (args.family == "elliptic") {
    family = SweepFamily::Elliptic;
  } else if (args.family == "automorphism-b0") {
    family = SweepFamily::AutomorphismB0;
  } else {
    throw InvalidInput("unknown family '" + args.family + "'");
  }
  PolarGrid grid = sweep_grid();
  if (args.grid.r_steps != 0 || args.grid.theta_steps != 0 || args.grid.r_max != kDefaultRMax) {
    GridArgs g = args.grid;
    if (g.r_steps == 0) g.r_steps = grid.r_values.size();
    if (g.theta_steps == 0) g.theta_steps = grid.theta_values.size();
    grid = build_grid(g);
  }
  std::vector<Complex> params;
  if (!args.alphas.empty()) {
    params = parse_alpha_list(args.alphas);
  } else if (family == SweepFamily::Elliptic) {
    if (args.lattice_radii < 1 || args.lattice_angles < 1) throw InvalidInput("lattice sizes must be >= 1");
    params = alpha_lattice(args.lattice_radii, args.lattice_angles);
  } else {
    if (args.circle_points < 1) throw InvalidInput("--points must be >= 1");
    params = unit_circle_lattice(args.circle_points);
  }
  for (const Complex p : params) {
    try {
      sweep_symbol(family, p);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(format_complex(p) + ": " + e.what());
    }
  }
  require_writable(args.json);

  const auto entries = run_sweep(space, family, params, grid);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& e : entries) table.push_back(to_json(e));
  const bool ok = sweep_matches(entries);
  const nlohmann::json j = {{"schema", kJsonSchemaVersion},
                            {"space", space.name()},
                            {"family", args.family},
                            {"grid",
                             {{"r_steps", grid.r_values.size()},
                              {"theta_steps", grid.theta_values.size()},
                              {"r_max", grid.r_max()}}},
                            {"entries", table},
                            {"all_match", ok}};
  if (args.json.empty()) {
    out << dump(j);
  } else {
    write_file_atomic(args.json, dump(j));
    for (const auto& e : entries) {
      out << format_complex(e.parameter) << " " << to_string(e.report.verdict);
      if (e.expected) out << (*e.expected == e.report.verdict ? " ok" : " MISMATCH");
      out << "\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
      throw InvalidInput("unknown suite '" + args.suite + "'");
    }
    suites = {args.suite};
  }
  require_writable(args.json);

  nlohmann::json all = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  int passed = 0, total = 0;
  char buf[64];
  for (const auto& suite : suites) {
    for (const auto& c : run_suite(suite)) {
      ++total;
      passed += c.passed ? 1 : 0;
      std::snprintf(buf, sizeof(buf), " (deviation %.3g, tolerance %.3g)", c.deviation, c.tolerance);
      out << (c.passed ? "PASS " : "FAIL ") << suite << ": " << c.name << buf;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
      nlohmann::json jc = to_json(c);
      jc["suite"] = suite;
      all.push_back(jc);
      if (!c.passed) failures.push_back(jc);
    }
  }
  out << passed << "/" << total << " checks passed\n";
  const nlohmann::json summary = {{"schema", kJsonSchemaVersion},
                                  {"suite", args.suite},
                                  {"passed", passed == total},
                                  {"checks", all},
                                  {"failures", failures}};
  if (!args.json.empty()) write_file_atomic(args.json, dump(summary));
  if (passed != total) {
    out << nlohmann::json({{"schema", kJsonSchemaVersion}, {"failures", failures}}).dump() << "\n";
  }
  return passed == total ? kExitOk : kExitFailure;
}

bool applicable(const ScalarFunction& f, InequalityCheck check) {
  try {
    require_hypotheses(f, check);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int cmd_ineq(const IneqArgs& args, std::ostream& out) {
  ScalarFunction f = ScalarFunction::power(2.0);
  try {
    f = ScalarFunction::parse(args.function);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  MapFamily map;
  try {
    map = parse_map_family(args.map);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  if (args.trials < 1) throw InvalidInput("--trials must be >= 1");
  const int dim_min = args.dim > 0 ? args.dim : args.dim_min;
  const int dim_max = args.dim > 0 ? args.dim : args.dim_max;
  if (dim_min < 1 || dim_max < dim_min) throw InvalidInput("invalid dimension range");

  std::vector<InequalityCheck> checks;
  if (args.check == "all") {
    for (auto c : {InequalityCheck::Pointwise, InequalityCheck::Popoviciu, InequalityCheck::CorollaryC1,
                   InequalityCheck::Propositions, InequalityCheck::Mapping}) {
      if (applicable(f, c)) checks.push_back(c);
    }
    if (checks.empty()) throw InvalidInput(f.name() + " meets the hypotheses of no check");
  } else {
    InequalityCheck c;
    try {
      c = parse_check(args.check);
      require_hypotheses(f, c);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
    checks.push_back(c);
  }
  require_writable(args.json);

  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;
  std::optional<TrialReport> worst;
  double condition_rate = 0.0;
  for (const auto c : checks) {
    TrialConfig cfg;
    cfg.seed = args.seed;
    cfg.trials = args.trials;
    cfg.dim_min = dim_min;
    cfg.dim_max = dim_max;
    cfg.function = f;
    cfg.map = map;
    cfg.check = c;
    cfg.diag_only = args.diag_only;
    const TrialReport r = run_trials(cfg);
    reports.push_back(to_json(r));
    ok = ok && r.passed;
    if (c != InequalityCheck::Pointwise) condition_rate = r.condition18_pass_rate;
    if (!worst || r.min_slack < worst->min_slack) worst = r;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %-12s min_slack %.6g (trial %d) tolerance %.1g\n",
                  r.passed ? "PASS" : "FAIL", r.check.c_str(), r.min_slack, r.argmin_trial, r.tolerance);
    out << buf;
  }
  nlohmann::json j = {{"schema", kJsonSchemaVersion},
                      {"seed", args.seed},
                      {"dims", {dim_min, dim_max}},
                      {"function", f.name()},
                      {"map", args.map},
                      {"diag_only", args.diag_only},
                      {"min_slack", worst->min_slack},
                      {"argmin_trial", worst->argmin_trial},
                      {"argmin_check", worst->check},
                      {"condition18_pass_rate", condition_rate},
                      {"checks", reports},
                      {"passed", ok}};
  if (args.json.empty()) {
    out << dump(j);
  } else {
    write_file_atomic(args.json, dump(j));
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berezin transforms, Berezin ranges and their convexity"};
  app.name("berezin");
  app.require_subcommand(1, 1);

  RangeArgs range;
  auto* range_cmd = app.add_subcommand("range", "Sample a Berezin range and classify its convexity");
  range_cmd->add_option("--space", range.space, "hardy | bergman | model");
  range_cmd->add_option("--n", range.model_n, "Model space dimension");
  range_cmd->add_option("--symbol", range.symbol.kind, "elliptic | automorphism | blaschke");
  range_cmd->add_option("--alpha", range.symbol.alpha, "Symbol parameter, e.g. 0.25+0.25i");
  range_cmd->add_option("--a", range.symbol.a, "Automorphism coefficient a");
  range_cmd->add_option("--b", range.symbol.b, "Automorphism coefficient b");
  add_grid_options(range_cmd, range.grid);
  range_cmd->add_option("--tol", range.tol, "Tolerance relative to the range diameter");
  range_cmd->add_option("--out", range.out_prefix, "Write PREFIX.csv, PREFIX.json, PREFIX.svg");
  range_cmd->add_option("--csv", range.csv, "CSV output path");
  range_cmd->add_option("--json", range.json, "Report JSON output path");
  range_cmd->add_option("--svg", range.svg, "SVG output path");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Convexity verdicts over a parameter lattice");
  sweep_cmd->add_option("--space", sweep.space, "hardy | bergman");
  sweep_cmd->add_option("--family", sweep.family, "elliptic | automorphism-b0");
  sweep_cmd->add_option("--alphas", sweep.alphas, "Comma-separated parameters");
  sweep_cmd->add_option("--lattice-radii", sweep.lattice_radii, "Rings of the alpha lattice");
  sweep_cmd->add_option("--lattice-angles", sweep.lattice_angles, "Points per ring");
  sweep_cmd->add_option("--points", sweep.circle_points, "Unit-circle points for automorphism-b0");
  add_grid_options(sweep_cmd, sweep.grid);
  sweep_cmd->add_option("--json", sweep.json, "Table output path");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem verification suite");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--json", verify.json, "Result JSON output path");

  IneqArgs ineq;
  auto* ineq_cmd = app.add_subcommand("ineq", "Randomized operator-inequality harness");
  ineq_cmd->add_option("--f", ineq.function, "power:<p> | neg-const[:<c>] | linear");
  ineq_cmd->add_option("--map", ineq.map, "identity | pinching | compression");
  ineq_cmd->add_option("--check", ineq.check,
                       "all | pointwise | popoviciu | corollary | propositions | mapping");
  ineq_cmd->add_option("--trials", ineq.trials, "Number of trials");
  ineq_cmd->add_option("--dim", ineq.dim, "Fixed dimension");
  ineq_cmd->add_option("--dim-min", ineq.dim_min, "Smallest dimension");
  ineq_cmd->add_option("--dim-max", ineq.dim_max, "Largest dimension");
  ineq_cmd->add_option("--seed", ineq.seed, "Root seed");
  ineq_cmd->add_flag("--diag-only", ineq.diag_only, "Draw diagonal operators only");
  ineq_cmd->add_option("--json", ineq.json, "Report JSON output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*range_cmd) return cmd_range(range, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*ineq_cmd) return cmd_ineq(ineq, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnwritable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInvalid;
}

}  // namespace berezin::cli
