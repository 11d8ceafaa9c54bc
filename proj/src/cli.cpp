#include "riskroute/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "riskroute/alternating.hpp"
#include "riskroute/analysis.hpp"
#include "riskroute/instances.hpp"
#include "riskroute/io.hpp"
#include "riskroute/series_parallel.hpp"

namespace riskroute::cli {

namespace {

/// Bad files, flags or parameters: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveFlags {
  double tol = 1e-8;
  std::size_t max_iter = 200'000;
  std::string risk_model;
};

struct FamilyFlags {
  std::string family = "braess";
  double gamma = 1.0, kappa = 1.0, v = 0.1, demand = 1.0;
  std::optional<double> alpha;
  int k = 2, budget = 6, nodes = 6, edges = 10, max_degree = 3;
  std::uint64_t seed = 0;
};

SolverOptions solver_options(const SolveFlags& flags) {
  SolverOptions opts;
  opts.tol = flags.tol;
  opts.max_iter = flags.max_iter;
  return opts;
}

RiskModel risk_model_flag(const std::string& text) {
  auto model = parse_risk_model(text);
  if (!model) throw InputError("unknown risk model '" + text + "' (expected mean-var or mean-stdev)");
  return *model;
}

void check_instance(const Instance& instance) {
  ValidationVerdict verdict = validate_instance(instance);
  if (!verdict.ok()) throw InputError("invalid instance: " + verdict.summary());
}

Instance load_instance(const std::string& path, const std::string& risk_override) {
  Instance instance;
  try {
    instance = read_instance_file(path);
  } catch (const InstanceParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!risk_override.empty()) instance.risk_model = risk_model_flag(risk_override);
  check_instance(instance);
  return instance;
}

FamilyParams family_params(const FamilyFlags& flags, const std::string& risk_model) {
  FamilyParams params;
  auto family = parse_family(flags.family);
  if (!family) throw InputError("unknown family '" + flags.family + "'");
  params.family = *family;
  if (!risk_model.empty()) params.risk_model = risk_model_flag(risk_model);
  params.gamma = flags.gamma;
  params.kappa = flags.kappa;
  params.v = flags.v;
  params.alpha = flags.alpha;
  params.k = flags.k;
  params.budget = flags.budget;
  params.nodes = flags.nodes;
  params.edges = flags.edges;
  params.max_degree = flags.max_degree;
  params.seed = flags.seed;
  params.demand = flags.demand;
  return params;
}

Instance build(const FamilyParams& params) {
  try {
    Instance instance = generate(params);
    check_instance(instance);
    return instance;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void add_family_options(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "pigou, braess, braess_general, zigzag, random_sp, random_general");
  cmd->add_option("--gamma", f.gamma, "risk aversion (pigou, random families)");
  cmd->add_option("--kappa", f.kappa, "pigou variance / random risk-to-latency cap");
  cmd->add_option("--v", f.v, "Braess variance parameter");
  cmd->add_option("--alpha", f.alpha, "Braess slope (braess_general)");
  cmd->add_option("--k", f.k, "zigzag size");
  cmd->add_option("--budget", f.budget, "series/parallel operations (random_sp)");
  cmd->add_option("--nodes", f.nodes, "node count (random_general)");
  cmd->add_option("--edges", f.edges, "edge count (random_general)");
  cmd->add_option("--max-degree", f.max_degree, "polynomial degree cap");
  cmd->add_option("--seed", f.seed, "generator seed");
  cmd->add_option("--demand", f.demand, "demand");
}

void add_solve_options(CLI::App* cmd, SolveFlags& s) {
  cmd->add_option("--tol", s.tol, "relative gap tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", s.max_iter, "iteration cap");
  cmd->add_option("--risk-model", s.risk_model, "override the risk model: mean-var or mean-stdev");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

std::string num(double value) { return format_number(value); }

// --- solve -----------------------------------------------------------------

int cmd_solve(const std::string& path, const std::string& mode, const SolveFlags& flags, const std::string& out_path,
              std::ostream& out) {
  Instance instance = load_instance(path, flags.risk_model);
  SolverOptions opts = solver_options(flags);
  EquilibriumResult result = mode == "rnwe" ? solve_rnwe(instance, opts) : solve_rawe(instance, opts);
  const Network& net = instance.network;

  out << "instance    " << instance.name << "\n";
  out << "mode        " << mode << " (" << to_string(result.flow.mode) << ")\n";
  out << "converged   " << (result.converged ? "yes" : "no") << "\n";
  out << "gap         " << num(result.relative_gap) << (result.gap_is_absolute ? " (absolute)" : "") << "\n";
  out << "iterations  " << result.iterations << "\n";
  out << "social_cost " << num(social_cost(net, result.flow.edge_flow)) << "\n";
  out << "paths\n";
  for (std::size_t p = 0; p < result.flow.paths.size(); ++p)
    out << "  " << path_label(net, result.flow.paths[p]) << "  " << num(result.flow.path_flow[static_cast<Eigen::Index>(p)])
        << "\n";
  if (!out_path.empty()) write_text(out_path, write_flow(instance, result));
  return result.converged ? kOk : kConvergenceFailure;
}

// --- analyze ---------------------------------------------------------------

void print_report(const PraReport& r, std::ostream& out) {
  out << "instance     " << r.instance_name << " (" << to_string(r.risk_model) << ", gamma " << num(r.gamma) << ")\n";
  out << "cost_rnwe    " << num(r.cost_rnwe) << "   gap " << num(r.gap_rnwe) << "\n";
  out << "cost_rawe    " << num(r.cost_rawe) << "   gap " << num(r.gap_rawe) << "\n";
  out << "pra          " << (r.pra_defined ? num(r.pra) : std::string("undefined")) << "\n";
  out << "kappa        " << num(r.kappa) << "\n";
  out << "alt path     " << (r.alternating_label.empty() ? "-" : r.alternating_label) << "\n";
  out << "eta          " << r.eta << "\n";
  out << "bound_eta    " << num(r.bound_eta) << "\n";
  out << "bound_worst  " << num(r.bound_worstcase) << "\n";
  out << "rho          " << num(r.rho) << "   bound_rho " << num(r.bound_rho) << "\n";
  out << "checks\n";
  for (const BoundCheck& c : r.checks) {
    const char* verdict = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
    char line[256];
    std::snprintf(line, sizeof line, "  %-28s %-4s %16s <= %s", c.name.c_str(), verdict, num(c.lhs).c_str(),
                  num(c.rhs).c_str());
    out << line;
    if (!c.proven) out << " [unproven bound]";
    if (!c.note.empty() && c.note != "unproven bound") out << " " << c.note;
    out << "\n";
  }
  out << "verdict      " << (r.proven_checks_pass() ? "PASS" : "FAIL") << "\n";
}

int report_exit(const Analysis& a) {
  if (!a.rnwe.converged || !a.rawe.converged) return kConvergenceFailure;
  return a.report.proven_checks_pass() ? kOk : kBoundFailure;
}

int cmd_analyze(const std::string& path, const SolveFlags& flags, const std::string& out_path, std::ostream& out) {
  Instance instance = load_instance(path, flags.risk_model);
  Analysis a = analyze(instance, solver_options(flags));
  print_report(a.report, out);
  out << "\n" << kSweepCsvHeader << "\n" << sweep_csv_row(0.0, a.report) << "\n";
  if (!out_path.empty()) write_text(out_path, write_report(a.report));
  return report_exit(a);
}

// --- sweep -----------------------------------------------------------------

struct SweepFlags {
  std::string param = "v";
  double from = 0.05, to = 0.5;
  int steps = 10;
};

void set_param(FamilyParams& params, const std::string& name, double value) {
  if (name == "gamma") params.gamma = value;
  else if (name == "kappa") params.kappa = value;
  else if (name == "v") params.v = value;
  else if (name == "alpha") params.alpha = value;
  else if (name == "demand") params.demand = value;
  else throw InputError("cannot sweep '" + name + "' (expected gamma, kappa, v, alpha or demand)");
}

struct SweepRow {
  std::string line;
  int code = kOk;
  std::string error;
};

int cmd_sweep(const FamilyFlags& family, const SweepFlags& sweep, const SolveFlags& flags, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  if (sweep.steps < 2) throw InputError("--steps must be at least 2");
  if (!(sweep.from < sweep.to)) throw InputError("--from must be below --to");
  FamilyParams base = family_params(family, flags.risk_model);
  set_param(base, sweep.param, sweep.from);

  std::vector<FamilyParams> points;
  for (int i = 0; i < sweep.steps; ++i) {
    FamilyParams p = base;
    double value = i + 1 == sweep.steps ? sweep.to : sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
    set_param(p, sweep.param, value);
    points.push_back(p);
  }
  // Parameter errors surface before any work starts.
  std::vector<Instance> instances;
  for (const FamilyParams& p : points) instances.push_back(build(p));

  SolverOptions opts = solver_options(flags);
  std::function<SweepRow(std::size_t)> job = [&](std::size_t i) {
    SweepRow row;
    try {
      Analysis a = analyze(instances[i], opts);
      double value = sweep.param == "gamma"   ? points[i].gamma
                     : sweep.param == "kappa" ? points[i].kappa
                     : sweep.param == "v"     ? points[i].v
                     : sweep.param == "alpha" ? *points[i].alpha
                                              : points[i].demand;
      row.line = sweep_csv_row(value, a.report);
      row.code = report_exit(a);
    } catch (const std::exception& e) {
      row.code = kInputError;
      row.error = e.what();
    }
    return row;
  };
  std::vector<SweepRow> rows = parallel_map(instances.size(), worker_count(), job);

  std::ostringstream csv;
  csv << kSweepCsvHeader << "\n";
  int code = kOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error.empty()) throw InputError(instances[i].name + ": " + rows[i].error);
    csv << rows[i].line << "\n";
    code = std::max(code, rows[i].code);
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_text(out_path, csv.str());
    out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  }
  if (code != kOk) err << "sweep: some rows failed their checks\n";
  return code;
}

// --- verify ----------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct SuiteSummary {
  std::string name;
  std::size_t total = 0, passed = 0;
  std::vector<std::string> failures;
};

SuiteSummary collect(const std::string& name, const std::vector<Outcome>& outcomes, std::uint64_t base_seed) {
  SuiteSummary s{name, outcomes.size(), 0, {}};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].pass) {
      ++s.passed;
    } else {
      s.failures.push_back("seed " + std::to_string(base_seed + i) + ": " + outcomes[i].detail);
    }
  }
  return s;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

FamilyParams random_general_params(std::uint64_t seed) {
  FamilyParams p;
  p.family = Family::RandomGeneral;
  p.seed = seed;
  p.nodes = 4 + static_cast<int>(seed % 5);
  p.edges = p.nodes + 2 + static_cast<int>(seed % 6);
  return p;
}

FamilyParams random_sp_params(std::uint64_t seed) {
  FamilyParams p;
  p.family = Family::RandomSp;
  p.seed = seed;
  p.budget = 1 + static_cast<int>(seed % 8);
  return p;
}

SuiteSummary suite_bound_chain(std::size_t n, std::uint64_t base, const SolverOptions& opts) {
  std::function<Outcome(std::size_t)> job = [&](std::size_t i) {
    return guarded([&] {
      Instance in = generate(random_general_params(base + i));
      Analysis a = analyze(in, opts);
      const PraReport& r = a.report;
      if (!a.rnwe.converged || !a.rawe.converged) return Outcome{false, "solver did not converge"};
      if (!r.kappa_finite()) return Outcome{true, ""};
      if (!r.alternating) return Outcome{false, "no alternating path"};
      if (r.eta > worst_case_eta(r.num_nodes)) return Outcome{false, "eta above the node ceiling"};
      for (const BoundCheck& c : r.checks)
        if (c.proven && !c.skipped && !c.pass)
          return Outcome{false, c.name + ": " + num(c.lhs) + " > " + num(c.rhs)};
      return Outcome{true, ""};
    });
  };
  return collect("bound-chain", parallel_map(n, worker_count(), job), base);
}

SuiteSummary suite_sp_theorem(std::size_t n, std::uint64_t base, int grid, const SolverOptions& opts) {
  std::function<Outcome(std::size_t)> job = [&](std::size_t i) {
    return guarded([&] {
      Instance in = generate(random_sp_params(base + i));
      if (!sp_decompose(in.network)) return Outcome{false, "generator produced a non-SP network"};
      if (enumerate_simple_paths(in.network).size() > 6) return Outcome{true, ""};
      OracleOptions oracle;
      oracle.grid = grid;
      OracleResult best = max_shortest_path_oracle(in, oracle);
      EquilibriumResult z = solve_rnwe(in, opts);
      double sz = shortest_path_length(in.network, z.flow.edge_flow);
      double slack = in.demand * latency_lipschitz_bound(in) / best.grid + 1e-6;
      if (best.best_value > sz + slack)
        return Outcome{false, "oracle " + num(best.best_value) + " exceeds S(z) " + num(sz)};
      return Outcome{true, ""};
    });
  };
  SuiteSummary s = collect("sp-theorem", parallel_map(n, worker_count(), job), base);
  // The zigzag family is the non-SP counterexample.
  for (int k = 2; k <= 4; ++k) {
    Outcome o = guarded([&] {
      Instance in = zigzag(k);
      if (sp_decompose(in.network)) return Outcome{false, "zigzag decomposed as SP"};
      OracleOptions oracle;
      oracle.grid = grid;
      oracle.max_paths = 10;
      double best = max_shortest_path_oracle(in, oracle).best_value;
      double sz = shortest_path_length(in.network, solve_rnwe(in, opts).flow.edge_flow);
      if (!(best > sz + 1e-6)) return Outcome{false, "zigzag oracle does not exceed S(z)"};
      return Outcome{true, ""};
    });
    ++s.total;
    if (o.pass) ++s.passed;
    else s.failures.push_back("zigzag(" + std::to_string(k) + "): " + o.detail);
  }
  return s;
}

SuiteSummary suite_sigma(std::size_t n, std::uint64_t base) {
  SuiteSummary s{"sigma-lemma", 0, 0, {}};
  std::mt19937_64 rng(base);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  // Rejection sampling keeps only vectors meeting the precondition.
  while (s.total < n) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng), e = u(rng);
    BraessSigmaVerdict v = braess_stdev_inequality(a, b, c, d, e);
    if (!v.precondition) continue;
    ++s.total;
    if (v.holds(1e-9)) {
      ++s.passed;
    } else if (s.failures.size() < 10) {
      s.failures.push_back("sigma (" + num(a) + ", " + num(b) + ", " + num(c) + ", " + num(d) + ", " + num(e) + ")");
    }
  }
  return s;
}

SuiteSummary suite_oracle(std::size_t n, std::uint64_t base, const SolverOptions& opts) {
  std::function<Outcome(std::size_t)> job = [&](std::size_t i) {
    return guarded([&] {
      std::uint64_t seed = base + i;
      Instance in = generate(seed % 2 ? random_general_params(seed) : random_sp_params(seed));
      EquilibriumResult x = solve_rawe(in, opts), z = solve_rnwe(in, opts);
      EdgePartition part = classify_edges(x.flow, z.flow, default_classification_eps(in.demand));
      AlternatingPath path = find_alternating_path(part, in.network);
      int best = exhaustive_min_forward_runs(part, in.network);
      if (!is_valid_alternating_path(path, part, in.network)) return Outcome{false, "invalid alternating path"};
      if (path.forward_runs != best)
        return Outcome{false, "eta " + std::to_string(path.forward_runs) + " but minimum is " + std::to_string(best)};
      return Outcome{true, ""};
    });
  };
  return collect("oracle", parallel_map(n, worker_count(), job), base);
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> seeds, std::uint64_t base, int grid,
               const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::size_t> defaults{
      {"bound-chain", 200}, {"sp-theorem", 100}, {"sigma-lemma", 100'000}, {"oracle", 200}};
  std::vector<std::string> names;
  if (suite == "all") {
    names = {"bound-chain", "sp-theorem", "sigma-lemma", "oracle"};
  } else if (defaults.count(suite)) {
    names = {suite};
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  SolverOptions opts = solver_options(flags);
  int code = kOk;
  for (const std::string& name : names) {
    std::size_t n = seeds.value_or(defaults.at(name));
    SuiteSummary s = name == "bound-chain" ? suite_bound_chain(n, base, opts)
                     : name == "sp-theorem" ? suite_sp_theorem(n, base, grid, opts)
                     : name == "sigma-lemma" ? suite_sigma(n, base)
                                             : suite_oracle(n, base, opts);
    bool ok = s.passed == s.total;
    out << s.name << ": " << s.passed << "/" << s.total << " " << (ok ? "PASS" : "FAIL") << "\n";
    for (const std::string& f : s.failures) err << "  " << s.name << " " << f << "\n";
    if (!ok) code = kBoundFailure;
  }
  return code;
}

// --- generate / oracle -----------------------------------------------------

int cmd_generate(const FamilyFlags& family, const std::string& risk_model, const std::string& out_path,
                 std::ostream& out) {
  Instance instance = build(family_params(family, risk_model));
  std::string text = write_instance(instance);
  if (out_path.empty()) out << text;
  else write_text(out_path, text);
  return kOk;
}

int cmd_oracle(const std::string& path, int grid, std::size_t max_paths, const SolveFlags& flags, std::ostream& out) {
  Instance instance = load_instance(path, flags.risk_model);
  OracleOptions opts;
  opts.grid = grid;
  opts.max_paths = max_paths;
  OracleResult best;
  try {
    best = max_shortest_path_oracle(instance, opts);
  } catch (const PathOverflow& e) {
    throw InputError(e.what());
  }
  EquilibriumResult z = solve_rnwe(instance, solver_options(flags));
  double sz = shortest_path_length(instance.network, z.flow.edge_flow);
  const Network& net = instance.network;
  out << "instance     " << instance.name << "\n";
  out << "series_par   " << (sp_decompose(net) ? "yes" : "no") << "\n";
  out << "grid         " << best.grid << " (" << best.points << " points)\n";
  out << "oracle_max   " << num(best.best_value) << "\n";
  out << "S(z)         " << num(sz) << "\n";
  out << "slack        " << num(instance.demand * latency_lipschitz_bound(instance) / best.grid) << "\n";
  out << "best flow\n";
  for (std::size_t p = 0; p < best.paths.size(); ++p) {
    double f = best.best_path_flow[static_cast<Eigen::Index>(p)];
    if (f > 0.0) out << "  " << path_label(net, best.paths[p]) << "  " << num(f) << "\n";
  }
  return z.converged ? kOk : kConvergenceFailure;
}

}  // namespace

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("RISKROUTE_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(cap, &end, 10);
    if (end != cap && value >= 1) n = std::min(n, static_cast<std::size_t>(value));
  }
  return n;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Risk-averse routing equilibria and price-of-risk-aversion analysis", "riskroute"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  FamilyFlags family_flags;
  std::string instance_path, out_path, mode = "rawe";

  CLI::App* solve = app.add_subcommand("solve", "solve one equilibrium");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--mode", mode, "rnwe or rawe")->check(CLI::IsMember({"rnwe", "rawe"}));
  add_solve_options(solve, solve_flags);
  solve->add_option("--out", out_path, "write the flow as JSON");

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "solve both equilibria and check every bound");
  analyze_cmd->add_option("instance", instance_path, "instance file")->required();
  add_solve_options(analyze_cmd, solve_flags);
  analyze_cmd->add_option("--out", out_path, "write the report as JSON");

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "analyze a family over one parameter and emit CSV");
  add_family_options(sweep, family_flags);
  add_solve_options(sweep, solve_flags);
  sweep->add_option("--param", sweep_flags.param, "gamma, kappa, v, alpha or demand");
  sweep->add_option("--from", sweep_flags.from, "first value");
  sweep->add_option("--to", sweep_flags.to, "last value");
  sweep->add_option("--steps", sweep_flags.steps, "number of rows (>= 2)");
  sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");

  std::string suite = "all";
  std::optional<std::size_t> seeds;
  std::uint64_t base_seed = 0;
  int grid = 100;
  CLI::App* verify = app.add_subcommand("verify", "run a property suite over generated instances");
  verify->add_option("--suite", suite, "bound-chain, sp-theorem, sigma-lemma, oracle or all");
  verify->add_option("--seeds", seeds, "instances (or samples) per suite");
  verify->add_option("--seed", base_seed, "first seed");
  verify->add_option("--grid", grid, "oracle grid resolution")->check(CLI::PositiveNumber);
  add_solve_options(verify, solve_flags);

  CLI::App* gen = app.add_subcommand("generate", "write a generated instance");
  add_family_options(gen, family_flags);
  gen->add_option("--risk-model", solve_flags.risk_model, "mean-var or mean-stdev");
  gen->add_option("--out", out_path, "instance path (stdout when omitted)");

  std::size_t max_paths = 6;
  CLI::App* oracle = app.add_subcommand("oracle", "grid search for the largest shortest-path latency");
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle->add_option("--grid", grid, "grid resolution")->check(CLI::PositiveNumber);
  oracle->add_option("--max-paths", max_paths, "path cap");
  add_solve_options(oracle, solve_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "riskroute: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*solve) return cmd_solve(instance_path, mode, solve_flags, out_path, out);
    if (*analyze_cmd) return cmd_analyze(instance_path, solve_flags, out_path, out);
    if (*sweep) return cmd_sweep(family_flags, sweep_flags, solve_flags, out_path, out, err);
    if (*verify) return cmd_verify(suite, seeds, base_seed, grid, solve_flags, out, err);
    if (*gen) return cmd_generate(family_flags, solve_flags.risk_model, out_path, out);
    if (*oracle) return cmd_oracle(instance_path, grid, max_paths, solve_flags, out);
  } catch (const InputError& e) {
    err << "riskroute: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "riskroute: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace riskroute::cli
