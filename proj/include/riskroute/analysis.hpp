#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riskroute/alternating.hpp"
#include "riskroute/network.hpp"
#include "riskroute/solvers.hpp"

namespace riskroute {

/// max_e risk_e(f_e) / l_e(f_e): variance-to-mean under mean-var, stdev-to-mean
/// under mean-stdev. 0/0 counts as 0; a positive risk over zero latency gives
/// +infinity.
double kappa_at_flow(const Instance& instance, const Vector& edge_flow);

/// S(f): the shortest expected path latency at the given edge flows.
double shortest_path_length(const Network& network, const Vector& edge_flow);

struct MinRiskPathBound {
  Path path;
  double risk = 0.0;
  /// l_{p*}(x), an upper bound on C(x).
  double bound = 0.0;
  double social_cost = 0.0;
  bool holds = false;
};

/// The path of least risk at the risk-averse flow bounds its social cost by
/// its own expected latency.
MinRiskPathBound min_risk_path_bound(const Instance& instance, const Vector& x_edge_flow,
                                     std::size_t path_cap = kDefaultPathCap);

struct BraessSigmaVerdict {
  double sigma_p = 0.0, sigma_q = 0.0, sigma_r = 0.0;
  double lhs = 0.0;  // sigma_p + sigma_q - sigma_r
  double rhs = 0.0;  // sigma_b + sigma_c
  bool precondition = false;  // sigma_r <= max(sigma_p, sigma_q)
  bool holds(double slack = 1e-9) const { return lhs <= rhs + slack; }
};

BraessSigmaVerdict braess_stdev_inequality(double sigma_a, double sigma_b, double sigma_c, double sigma_d,
                                           double sigma_e);

struct OracleResult {
  std::vector<Path> paths;
  Vector best_path_flow;
  double best_value = 0.0;
  /// Grid actually used; smaller than requested when the point budget binds.
  int grid = 0;
  std::size_t points = 0;
};

struct OracleOptions {
  int grid = 100;
  std::size_t max_paths = 6;
  std::size_t point_budget = 4'000'000;
};

/// Exhaustive search of max_f S(f) over path flows on the demand simplex with
/// resolution d / grid. Throws PathOverflow above `max_paths` paths.
OracleResult max_shortest_path_oracle(const Instance& instance, const OracleOptions& options = {});

/// Crude Lipschitz constant of S on [0, d]: sum_e l_e'(d).
double latency_lipschitz_bound(const Instance& instance);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = true;
  /// False for conjectural bounds (reported, never gating).
  bool proven = true;
  bool skipped = false;
  std::string note;
};

/// lhs <= rhs up to a relative slack of 1e-6.
bool within_bound(double lhs, double rhs, double rel_slack = 1e-6);

struct PraReport {
  std::string instance_name;
  RiskModel risk_model = RiskModel::MeanVar;
  double gamma = 0.0;
  double demand = 1.0;
  std::size_t num_nodes = 0;

  double cost_rnwe = 0.0;
  double cost_rawe = 0.0;
  bool pra_defined = true;
  double pra = 0.0;
  double kappa = 0.0;
  /// Largest risk-to-latency ratio over both solved flows (diagnostic).
  double kappa_all_flows = 0.0;
  int eta = 0;
  double bound_eta = 0.0;
  double bound_worstcase = 0.0;
  double rho = 0.0;
  double bound_rho = 0.0;
  double gap_rnwe = 0.0;
  double gap_rawe = 0.0;
  bool converged = false;

  EdgePartition partition;
  std::optional<AlternatingPath> alternating;
  std::string alternating_label;
  std::vector<BoundCheck> checks;

  bool kappa_finite() const;
  /// Every proven, non-skipped check passes.
  bool proven_checks_pass() const;
  const BoundCheck* find(const std::string& name) const;
};

struct AnalysisOptions {
  /// Classification tolerance as a multiple of the demand.
  double eps_factor = 1e-7;
  std::size_t path_cap = kDefaultPathCap;
};

PraReport pra_report(const Instance& instance, const EquilibriumResult& x, const EquilibriumResult& z,
                     const AnalysisOptions& options = {});

/// Solves both equilibria and builds the report.
struct Analysis {
  EquilibriumResult rawe;
  EquilibriumResult rnwe;
  PraReport report;
};
Analysis analyze(const Instance& instance, const SolverOptions& solver = {}, const AnalysisOptions& options = {});

}  // namespace riskroute
