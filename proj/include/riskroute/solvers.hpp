#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "riskroute/network.hpp"

namespace riskroute {

/// Which path cost the equilibrium is taken with respect to.
enum class ObjectiveMode { RiskNeutral, MeanVar, MeanStdev };

const char* to_string(ObjectiveMode mode);

/// Risk-averse objective matching the instance's risk model.
inline ObjectiveMode risk_averse_mode(const Instance& instance) {
  return instance.risk_model == RiskModel::MeanVar ? ObjectiveMode::MeanVar : ObjectiveMode::MeanStdev;
}

/// Path flows over an explicit path list, with the derived edge flows.
struct Flow {
  std::vector<Path> paths;
  Vector path_flow;
  Vector edge_flow;
  ObjectiveMode mode = ObjectiveMode::RiskNeutral;

  double total() const { return path_flow.sum(); }
  /// Flow on the given path, 0 when the path is not listed.
  double flow_on(const Path& path) const;
};

Flow make_flow(const Network& network, std::vector<Path> paths, Vector path_flow, ObjectiveMode mode);

struct EquilibriumResult {
  Flow flow;
  double relative_gap = 0.0;
  bool gap_is_absolute = false;
  std::size_t iterations = 0;
  bool converged = false;
};

struct SolverOptions {
  double tol = 1e-8;
  std::size_t max_iter = 200'000;
  /// Path cap for the path-enumerating mean-stdev solver.
  std::size_t path_cap = 2'000;
  /// When set, receives the potential value after every iteration
  /// (conditional-gradient solver only).
  std::vector<double>* potential_trace = nullptr;
};

class ConservationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Q_p under the given objective: l_p, l_p + gamma*sum v_e, or l_p + gamma*sqrt(sum sigma_e^2).
double mode_path_cost(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow, const Path& path);

/// Separable edge cost used by the potential: l_e, or l_e + gamma v_e for mean-var.
Vector separable_edge_costs(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow);

/// Beckmann-type potential sum_e int_0^{f_e} c_e(t) dt (separable modes only).
double potential(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow);

struct Gap {
  double value = 0.0;
  /// True when the minimum path cost was 0 and the absolute gap was returned.
  bool absolute = false;
};

/// (sum_p f_p Q_p - d min_q Q_q) / (d min_q Q_q). The minimum is exact via a
/// shortest path for the separable modes and taken over all enumerated paths
/// for mean-stdev.
Gap relative_gap(const Instance& instance, const Flow& flow, ObjectiveMode mode);

/// Conditional-gradient minimisation of the separable potential. `mode` must
/// be RiskNeutral or MeanVar.
EquilibriumResult solve_wardrop(const Instance& instance, ObjectiveMode mode, const SolverOptions& options = {});

/// Path-swapping equalisation for the non-separable mean-stdev cost.
EquilibriumResult solve_rawe_meanstdev(const Instance& instance, const SolverOptions& options = {});

/// Risk-neutral equilibrium z.
EquilibriumResult solve_rnwe(const Instance& instance, const SolverOptions& options = {});
/// Risk-averse equilibrium x under the instance's own risk model.
EquilibriumResult solve_rawe(const Instance& instance, const SolverOptions& options = {});

/// Greedy path decomposition: repeatedly peel the lexicographically-first
/// source->sink path of positive residual flow at its bottleneck value.
Flow decompose_edge_flow(const Network& network, const Vector& edge_flow, double demand);

}  // namespace riskroute
