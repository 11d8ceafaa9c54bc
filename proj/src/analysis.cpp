#include "riskroute/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskroute/series_parallel.hpp"
#include "riskroute/shortest_path.hpp"

namespace riskroute {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double kappa_at_flow(const Instance& instance, const Vector& edge_flow) {
  const Network& net = instance.network;
  double kappa = 0.0;
  for (std::size_t e = 0; e < net.num_edges(); ++e) {
    double f = edge_flow[static_cast<Eigen::Index>(e)];
    double risk = net.edge(e).risk(f);
    double latency = net.edge(e).latency(f);
    if (risk <= 0.0) continue;
    if (latency <= 0.0) return kInf;
    kappa = std::max(kappa, risk / latency);
  }
  return kappa;
}

double shortest_path_length(const Network& network, const Vector& edge_flow) {
  return shortest_path(network, edge_latencies(network, edge_flow)).cost;
}

MinRiskPathBound min_risk_path_bound(const Instance& instance, const Vector& x_edge_flow, std::size_t path_cap) {
  const Network& net = instance.network;
  MinRiskPathBound out;
  out.risk = kInf;
  for (const Path& path : enumerate_simple_paths(net, path_cap)) {
    double risk = path_risk(instance, x_edge_flow, path);
    double latency = path_latency(net, x_edge_flow, path);
    // Among equally risky paths the cheapest one gives the tightest bound.
    if (risk < out.risk || (risk == out.risk && latency < out.bound)) {
      out.risk = risk;
      out.bound = latency;
      out.path = path;
    }
  }
  out.social_cost = social_cost(net, x_edge_flow);
  out.holds = within_bound(out.social_cost, out.bound);
  return out;
}

BraessSigmaVerdict braess_stdev_inequality(double sigma_a, double sigma_b, double sigma_c, double sigma_d,
                                           double sigma_e) {
  BraessSigmaVerdict v;
  v.sigma_p = std::sqrt(sigma_a * sigma_a + sigma_b * sigma_b);
  v.sigma_q = std::sqrt(sigma_c * sigma_c + sigma_d * sigma_d);
  v.sigma_r = std::sqrt(sigma_a * sigma_a + sigma_e * sigma_e + sigma_d * sigma_d);
  v.lhs = v.sigma_p + v.sigma_q - v.sigma_r;
  v.rhs = sigma_b + sigma_c;
  v.precondition = v.sigma_r <= std::max(v.sigma_p, v.sigma_q);
  return v;
}

double latency_lipschitz_bound(const Instance& instance) {
  double total = 0.0;
  for (const Edge& edge : instance.network.edges()) total += edge.latency.derivative(instance.demand);
  return total;
}

OracleResult max_shortest_path_oracle(const Instance& instance, const OracleOptions& options) {
  const Network& net = instance.network;
  OracleResult result;
  result.paths = enumerate_simple_paths(net, options.max_paths);
  const std::size_t np = result.paths.size();
  if (np == 0) throw std::invalid_argument("sink unreachable");

  // Largest grid <= requested whose simplex point count C(g + P - 1, P - 1)
  // fits the budget.
  auto simplex_points = [&](int g) {
    double count = 1.0;
    for (std::size_t i = 1; i < np; ++i) count = count * (g + static_cast<double>(i)) / static_cast<double>(i);
    return count;
  };
  int grid = std::max(1, options.grid);
  while (grid > 1 && simplex_points(grid) > static_cast<double>(options.point_budget)) --grid;
  result.grid = grid;

  const double unit = instance.demand / grid;
  const std::size_t m = net.num_edges();
  std::vector<int> units(np, 0);
  Vector ef = Vector::Zero(static_cast<Eigen::Index>(m));
  std::vector<double> latency(m);
  result.best_value = -kInf;
  result.best_path_flow = Vector::Zero(static_cast<Eigen::Index>(np));

  auto shift = [&](std::size_t p, int k) {
    for (std::size_t e : result.paths[p]) ef[static_cast<Eigen::Index>(e)] += k * unit;
  };
  auto evaluate = [&]() {
    for (std::size_t e = 0; e < m; ++e) latency[e] = net.edge(e).latency(ef[static_cast<Eigen::Index>(e)]);
    double s = kInf;
    for (const Path& path : result.paths) {
      double l = 0.0;
      for (std::size_t e : path) l += latency[e];
      s = std::min(s, l);
    }
    ++result.points;
    if (s > result.best_value) {
      result.best_value = s;
      for (std::size_t p = 0; p < np; ++p) result.best_path_flow[static_cast<Eigen::Index>(p)] = units[p] * unit;
    }
  };
  auto recurse = [&](auto&& self, std::size_t p, int remaining) -> void {
    if (p + 1 == np) {
      units[p] = remaining;
      shift(p, remaining);
      evaluate();
      shift(p, -remaining);
      units[p] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      units[p] = k;
      if (k) shift(p, 1);
      self(self, p + 1, remaining - k);
    }
    shift(p, -units[p]);
    units[p] = 0;
  };
  recurse(recurse, 0, grid);
  return result;
}

bool within_bound(double lhs, double rhs, double rel_slack) {
  if (std::isnan(lhs) || std::isnan(rhs)) return false;
  if (rhs == kInf) return true;
  return lhs <= rhs + rel_slack * std::abs(rhs) + 1e-12;
}

bool PraReport::kappa_finite() const { return std::isfinite(kappa); }

bool PraReport::proven_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return !c.proven || c.skipped || c.pass; });
}

const BoundCheck* PraReport::find(const std::string& name) const {
  for (const BoundCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

PraReport pra_report(const Instance& instance, const EquilibriumResult& x, const EquilibriumResult& z,
                     const AnalysisOptions& options) {
  const Network& net = instance.network;
  const Vector& xf = x.flow.edge_flow;
  const Vector& zf = z.flow.edge_flow;
  const double gamma = instance.gamma;
  const bool stdev = instance.risk_model == RiskModel::MeanStdev;
  const bool braess = braess_labeling(net).has_value();

  PraReport report;
  report.instance_name = instance.name;
  report.risk_model = instance.risk_model;
  report.gamma = gamma;
  report.demand = instance.demand;
  report.num_nodes = net.num_nodes();
  report.cost_rawe = social_cost(net, xf);
  report.cost_rnwe = social_cost(net, zf);
  report.pra_defined = report.cost_rnwe > 0.0;
  report.pra = report.pra_defined ? report.cost_rawe / report.cost_rnwe : std::numeric_limits<double>::quiet_NaN();
  report.kappa = kappa_at_flow(instance, xf);
  report.kappa_all_flows = std::max(report.kappa, kappa_at_flow(instance, zf));
  report.gap_rawe = x.relative_gap;
  report.gap_rnwe = z.relative_gap;
  report.converged = x.converged && z.converged;

  const bool kappa_ok = report.kappa_finite();
  const double scale = gamma == 0.0 ? 1.0 : 1.0 + gamma * report.kappa;
  const double gk = gamma == 0.0 ? 0.0 : gamma * report.kappa;

  auto add = [&](std::string name, double lhs, double rhs, bool proven, bool skip = false, std::string note = {}) {
    BoundCheck check;
    check.name = std::move(name);
    check.lhs = lhs;
    check.rhs = rhs;
    check.proven = proven;
    check.skipped = skip;
    check.pass = skip || within_bound(lhs, rhs);
    check.note = std::move(note);
    report.checks.push_back(std::move(check));
  };
  const std::string unbounded_note = "kappa unbounded";

  // Alternating path.
  report.partition = classify_edges(xf, zf, options.eps_factor * instance.demand);
  try {
    AlternatingPath path = find_alternating_path(report.partition, net);
    report.eta = path.forward_runs;
    report.alternating_label = path.to_string(net);
    report.alternating = std::move(path);
  } catch (const AlternatingPathError&) {
    report.eta = 0;
  }
  const bool have_path = report.alternating.has_value() &&
                         is_valid_alternating_path(*report.alternating, report.partition, net);
  add("alternating_path_exists", have_path ? 0.0 : 1.0, 0.0, true);

  const int worst = worst_case_eta(net.num_nodes());
  report.bound_eta = kappa_ok ? theoretical_pra_bound(gamma, report.kappa, report.eta) : kInf;
  report.bound_worstcase = kappa_ok ? theoretical_pra_bound(gamma, report.kappa, worst) : kInf;

  const double s_x = shortest_path_length(net, xf);
  const double s_z = shortest_path_length(net, zf);
  report.rho = s_z > 0.0 ? s_x / s_z : kInf;
  report.bound_rho = kappa_ok ? scale * report.rho : kInf;

  // Bounds on the risk-averse cost by single paths.
  double min_q = kInf;
  double max_norm_excess = -kInf;
  const std::vector<Path> paths = enumerate_simple_paths(net, options.path_cap);
  for (const Path& p : paths) {
    min_q = std::min(min_q, path_cost(instance, xf, p));
    if (stdev) max_norm_excess = std::max(max_norm_excess, path_stdev(net, xf, p) - path_risk_sum(net, xf, p));
  }
  add("rawe_cost_le_path_cost", report.cost_rawe, min_q, true);
  add("rawe_cost_le_scaled_latency", report.cost_rawe, scale * s_x, true, !kappa_ok, kappa_ok ? "" : unbounded_note);
  MinRiskPathBound min_risk = min_risk_path_bound(instance, xf, options.path_cap);
  add("min_risk_path", report.cost_rawe, min_risk.bound, true, false, path_label(net, min_risk.path));
  if (stdev) add("stdev_norm", max_norm_excess, 0.0, true);

  // Alternating-path chain.
  const bool all_forward = have_path && report.alternating->backward_count() == 0;
  const bool lemma1_proven = !stdev || all_forward || braess;
  const std::string conjecture = lemma1_proven ? "" : "unproven bound";
  if (have_path && kappa_ok) {
    const AlternatingPath& pi = *report.alternating;
    double l1_x = alternating_bound_expression(net, xf, pi, scale);
    double l1_z = alternating_bound_expression(net, zf, pi, scale);
    double l2 = lemma2_rhs(instance, zf, pi);
    double forward_z = 0.0;
    for (const Arc& arc : pi.arcs)
      if (arc.direction == ArcDirection::Forward)
        forward_z += net.edge(arc.edge).latency(zf[static_cast<Eigen::Index>(arc.edge)]);
    add("lemma1", report.cost_rawe, l1_x, lemma1_proven, false, conjecture);
    add("lemma1_monotone", l1_x, l1_z, true);
    add("lemma2", l2, report.cost_rnwe, true);
    add("forward_blocks", report.cost_rnwe + gk * forward_z,
        report.cost_rnwe * theoretical_pra_bound(gamma, report.kappa, report.eta), true);
  } else {
    std::string why = have_path ? unbounded_note : "no alternating path";
    for (const char* name : {"lemma1", "lemma1_monotone", "lemma2", "forward_blocks"})
      add(name, 0.0, 0.0, true, true, why);
  }

  // PRA bounds.
  add("theorem_eta", report.cost_rawe, report.bound_eta * report.cost_rnwe, lemma1_proven && have_path,
      !kappa_ok || !have_path, kappa_ok ? conjecture : unbounded_note);
  add("worst_case_bound", report.cost_rawe, report.bound_worstcase * report.cost_rnwe, lemma1_proven,
      !kappa_ok, kappa_ok ? conjecture : unbounded_note);
  add("rho_bound", report.cost_rawe, report.bound_rho * report.cost_rnwe, true, !kappa_ok || !std::isfinite(report.rho),
      kappa_ok ? "" : unbounded_note);

  if (stdev && braess) {
    const BraessLabels l = *braess_labeling(net);
    auto sigma = [&](std::size_t e) { return net.edge(e).risk(xf[static_cast<Eigen::Index>(e)]); };
    BraessSigmaVerdict v = braess_stdev_inequality(sigma(l.a), sigma(l.b), sigma(l.c), sigma(l.d), sigma(l.e));
    add("braess_sigma_lemma", v.lhs, v.rhs, true, !v.precondition, v.precondition ? "" : "precondition fails");
  }
  return report;
}

Analysis analyze(const Instance& instance, const SolverOptions& solver, const AnalysisOptions& options) {
  Analysis out;
  out.rnwe = solve_rnwe(instance, solver);
  out.rawe = solve_rawe(instance, solver);
  out.report = pra_report(instance, out.rawe, out.rnwe, options);
  return out;
}

}  // namespace riskroute
