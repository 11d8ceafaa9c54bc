#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "riskroute/network.hpp"
#include "riskroute/solvers.hpp"

namespace riskroute {

enum class EdgeClass { A, B, Removed };

/// Partition of the edges by comparing the risk-neutral flow z with the
/// risk-averse flow x. A: z_e >= x_e and z_e > 0. B: z_e < x_e. Removed: both
/// flows negligible.
struct EdgePartition {
  std::vector<EdgeClass> classes;
  double eps = 0.0;

  EdgeClass operator[](std::size_t e) const { return classes[e]; }
  std::vector<std::size_t> members(EdgeClass which) const;
  std::vector<std::string> member_ids(const Network& network, EdgeClass which) const;
};

/// Default classification tolerance: 1e-7 times the demand.
inline double default_classification_eps(double demand) { return 1e-7 * demand; }

EdgePartition classify_edges(const Vector& x_edge_flow, const Vector& z_edge_flow, double eps);
inline EdgePartition classify_edges(const Flow& x, const Flow& z, double eps) {
  return classify_edges(x.edge_flow, z.edge_flow, eps);
}

enum class ArcDirection { Forward, Backward };

struct Arc {
  std::size_t edge;
  ArcDirection direction;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct AlternatingPath {
  std::vector<Arc> arcs;
  int forward_runs = 0;

  std::size_t backward_count() const;
  std::string to_string(const Network& network) const;
};

/// Number of maximal blocks of consecutive forward arcs.
int count_forward_runs(const std::vector<Arc>& arcs);

class AlternatingPathError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Source->sink path in the residual digraph (A edges forward, B edges
/// reversed) with the fewest forward runs; ties go to fewer arcs. Throws
/// AlternatingPathError when none exists, which cannot happen for a pair of
/// equilibria of the same instance.
AlternatingPath find_alternating_path(const EdgePartition& partition, const Network& network);

/// True when the alternating path visits distinct nodes, uses A edges forward
/// and B edges backward, and its forward_runs field is consistent.
bool is_valid_alternating_path(const AlternatingPath& path, const EdgePartition& partition, const Network& network);

/// Fewest forward runs over every simple residual source->sink path, by
/// exhaustive enumeration. Exponential; meant for cross-checking small graphs.
/// Returns -1 when no residual path exists.
int exhaustive_min_forward_runs(const EdgePartition& partition, const Network& network);

/// (1 + gamma kappa) sum_{A on path} l_e(x_e) - sum_{B on path} l_e(x_e).
/// Throws std::domain_error for a mean-stdev instance when the path has a
/// backward arc and the network is not a Braess network.
double lemma1_rhs(const Instance& instance, const Vector& x_edge_flow, const AlternatingPath& path, double kappa);

/// The same expression evaluated at an arbitrary flow, without the
/// topology restriction (used for the bound chain).
double alternating_bound_expression(const Network& network, const Vector& edge_flow, const AlternatingPath& path,
                                    double forward_scale);

/// sum_{A on path} l_e(z_e) - sum_{B on path} l_e(z_e).
double lemma2_rhs(const Instance& instance, const Vector& z_edge_flow, const AlternatingPath& path);

/// 1 + gamma kappa eta.
double theoretical_pra_bound(double gamma, double kappa, int eta);

/// ceil((n - 1) / 2).
int worst_case_eta(std::size_t num_nodes);

}  // namespace riskroute
