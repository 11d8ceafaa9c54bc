#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "riskroute/cost_poly.hpp"

namespace riskroute {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class RiskModel { MeanVar, MeanStdev };

const char* to_string(RiskModel model);
std::optional<RiskModel> parse_risk_model(const std::string& text);

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  CostPoly latency;
  /// Variance under the mean-var model, standard deviation under mean-stdev.
  CostPoly risk;
};

/// Raised for structurally malformed networks (unknown endpoints, duplicate
/// ids, self-loops). Semantic problems are reported by validate_instance.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed multigraph with a single source and sink. Immutable once built.
///
/// Nodes and edges keep their declaration order for storage; every
/// deterministic traversal uses the lexicographic rank of the id strings.
class Network {
 public:
  Network() = default;
  Network(std::vector<std::string> nodes, std::vector<Edge> edges, std::string source, std::string sink);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  const std::string& source_id() const { return source_; }
  const std::string& sink_id() const { return sink_; }
  std::size_t source() const { return source_index_; }
  std::size_t sink() const { return sink_index_; }

  std::size_t tail(std::size_t e) const { return tails_[e]; }
  std::size_t head(std::size_t e) const { return heads_[e]; }

  std::optional<std::size_t> node_index(const std::string& id) const;
  std::optional<std::size_t> edge_index(const std::string& id) const;
  std::size_t edge_index_or_throw(const std::string& id) const;

  /// Outgoing / incoming edge indices, sorted by edge id.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  /// Lexicographic rank of node / edge ids (0 = smallest).
  std::size_t node_rank(std::size_t v) const { return node_rank_[v]; }
  std::size_t edge_rank(std::size_t e) const { return edge_rank_[e]; }

  bool has_directed_cycle() const;
  bool sink_reachable() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.nodes_ == b.nodes_ && a.source_ == b.source_ && a.sink_ == b.sink_ && a.edges_equal(b);
  }

 private:
  bool edges_equal(const Network& other) const;

  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::string source_;
  std::string sink_;
  std::size_t source_index_ = 0;
  std::size_t sink_index_ = 0;
  std::vector<std::size_t> tails_, heads_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<std::size_t> node_rank_, edge_rank_;
  std::unordered_map<std::string, std::size_t> node_lookup_, edge_lookup_;
};

struct Instance {
  std::string name;
  Network network;
  double demand = 1.0;
  double gamma = 0.0;
  RiskModel risk_model = RiskModel::MeanVar;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Violation {
  std::string kind;  // "negative coefficient", "sink unreachable", "directed cycle", ...
  std::string detail;
};

struct ValidationVerdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
  std::string summary() const;
};

ValidationVerdict validate_instance(const Instance& instance);

/// Simple source-sink path as an ordered list of edge indices.
using Path = std::vector<std::size_t>;

class PathOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultPathCap = 10'000;

/// All simple source->sink paths in lexicographic order of their edge-id
/// sequences. Throws PathOverflow when more than `cap` paths exist.
std::vector<Path> enumerate_simple_paths(const Network& network, std::size_t cap = kDefaultPathCap);

std::vector<std::string> path_edge_ids(const Network& network, const Path& path);
std::string path_label(const Network& network, const Path& path);

/// Edge-by-path 0/1 incidence matrix.
Matrix incidence_matrix(const Network& network, const std::vector<Path>& paths);

/// f_e = sum of the flows of the paths containing e.
Vector edge_flow(const Network& network, const std::vector<Path>& paths, const Vector& path_flow);

Vector edge_latencies(const Network& network, const Vector& edge_flow);
Vector edge_risks(const Network& network, const Vector& edge_flow);

double path_latency(const Network& network, const Vector& edge_flow, const Path& path);

/// Sum of the edge risk values along the path (path variance under mean-var).
double path_risk_sum(const Network& network, const Vector& edge_flow, const Path& path);

/// Path standard deviation under mean-stdev: sqrt of the summed squared edge stdevs.
double path_stdev(const Network& network, const Vector& edge_flow, const Path& path);

/// Risk term of the path under the instance's model (variance or stdev).
double path_risk(const Instance& instance, const Vector& edge_flow, const Path& path);

/// Risk-averse path cost Q_p: latency plus gamma times the path risk.
double path_cost(const Instance& instance, const Vector& edge_flow, const Path& path);

/// Total expected delay sum_e f_e l_e(f_e).
double social_cost(const Network& network, const Vector& edge_flow);

}  // namespace riskroute
