#include "riskroute/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace riskroute {

const char* to_string(RiskModel model) {
  return model == RiskModel::MeanVar ? "mean-var" : "mean-stdev";
}

std::optional<RiskModel> parse_risk_model(const std::string& text) {
  if (text == "mean-var") return RiskModel::MeanVar;
  if (text == "mean-stdev") return RiskModel::MeanStdev;
  return std::nullopt;
}

namespace {

std::vector<std::size_t> ranks_of(const std::vector<std::string>& ids) {
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  std::vector<std::size_t> rank(ids.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

}  // namespace

Network::Network(std::vector<std::string> nodes, std::vector<Edge> edges, std::string source, std::string sink)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), source_(std::move(source)), sink_(std::move(sink)) {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (!node_lookup_.emplace(nodes_[v], v).second) throw NetworkError("duplicate node id '" + nodes_[v] + "'");
  }
  auto lookup = [&](const std::string& id, const std::string& what) {
    auto it = node_lookup_.find(id);
    if (it == node_lookup_.end()) throw NetworkError(what + " '" + id + "' is not a declared node");
    return it->second;
  };
  source_index_ = lookup(source_, "source");
  sink_index_ = lookup(sink_, "sink");
  if (source_index_ == sink_index_) throw NetworkError("source and sink coincide");

  tails_.resize(edges_.size());
  heads_.resize(edges_.size());
  out_.assign(nodes_.size(), {});
  in_.assign(nodes_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!edge_lookup_.emplace(edge.id, e).second) throw NetworkError("duplicate edge id '" + edge.id + "'");
    tails_[e] = lookup(edge.tail, "tail of edge '" + edge.id + "'");
    heads_[e] = lookup(edge.head, "head of edge '" + edge.id + "'");
    if (tails_[e] == heads_[e]) throw NetworkError("edge '" + edge.id + "' is a self-loop");
    out_[tails_[e]].push_back(e);
    in_[heads_[e]].push_back(e);
  }

  node_rank_ = ranks_of(nodes_);
  std::vector<std::string> edge_ids;
  edge_ids.reserve(edges_.size());
  for (const Edge& edge : edges_) edge_ids.push_back(edge.id);
  edge_rank_ = ranks_of(edge_ids);

  auto by_id = [&](std::size_t a, std::size_t b) { return edge_rank_[a] < edge_rank_[b]; };
  for (auto& list : out_) std::sort(list.begin(), list.end(), by_id);
  for (auto& list : in_) std::sort(list.begin(), list.end(), by_id);
}

std::optional<std::size_t> Network::node_index(const std::string& id) const {
  auto it = node_lookup_.find(id);
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Network::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Network::edge_index_or_throw(const std::string& id) const {
  auto e = edge_index(id);
  if (!e) throw NetworkError("unknown edge id '" + id + "'");
  return *e;
}

bool Network::edges_equal(const Network& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& a = edges_[e];
    const Edge& b = other.edges_[e];
    if (a.id != b.id || a.tail != b.tail || a.head != b.head || !(a.latency == b.latency) || !(a.risk == b.risk))
      return false;
  }
  return true;
}

bool Network::has_directed_cycle() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indegree(nodes_.size(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) ++indegree[heads_[e]];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    if (indegree[v] == 0) stack.push_back(v);
  std::size_t visited = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++visited;
    for (std::size_t e : out_[v])
      if (--indegree[heads_[e]] == 0) stack.push_back(heads_[e]);
  }
  return visited != nodes_.size();
}

bool Network::sink_reachable() const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{source_index_};
  seen[source_index_] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (v == sink_index_) return true;
    for (std::size_t e : out_[v]) {
      if (!seen[heads_[e]]) {
        seen[heads_[e]] = true;
        stack.push_back(heads_[e]);
      }
    }
  }
  return false;
}

bool ValidationVerdict::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationVerdict::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].kind;
    if (!violations[i].detail.empty()) out << " (" << violations[i].detail << ")";
  }
  return out.str();
}

ValidationVerdict validate_instance(const Instance& instance) {
  ValidationVerdict verdict;
  const Network& net = instance.network;
  for (const Edge& edge : net.edges()) {
    if (!edge.latency.nonnegative())
      verdict.violations.push_back({"negative coefficient", "latency of edge '" + edge.id + "'"});
    if (!edge.risk.nonnegative())
      verdict.violations.push_back({"negative coefficient", "risk of edge '" + edge.id + "'"});
  }
  if (net.num_nodes() < 2) {
    verdict.violations.push_back({"sink unreachable", "network has fewer than two nodes"});
    return verdict;
  }
  if (!net.sink_reachable()) verdict.violations.push_back({"sink unreachable", net.sink_id()});
  if (net.has_directed_cycle()) verdict.violations.push_back({"directed cycle", ""});
  if (!(instance.demand > 0.0) || !std::isfinite(instance.demand))
    verdict.violations.push_back({"demand not positive", std::to_string(instance.demand)});
  if (!(instance.gamma >= 0.0) || !std::isfinite(instance.gamma))
    verdict.violations.push_back({"negative gamma", std::to_string(instance.gamma)});
  return verdict;
}

std::vector<Path> enumerate_simple_paths(const Network& network, std::size_t cap) {
  std::vector<Path> paths;
  if (network.num_nodes() == 0) return paths;
  std::vector<bool> on_path(network.num_nodes(), false);
  Path current;

  // Depth-first search over out-edges sorted by id yields lexicographic order
  // of the edge-id sequences directly.
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == network.sink()) {
      if (paths.size() >= cap)
        throw PathOverflow("more than " + std::to_string(cap) + " simple source-sink paths");
      paths.push_back(current);
      return;
    }
    on_path[v] = true;
    for (std::size_t e : network.out_edges(v)) {
      std::size_t w = network.head(e);
      if (on_path[w]) continue;
      current.push_back(e);
      self(self, w);
      current.pop_back();
    }
    on_path[v] = false;
  };
  dfs(dfs, network.source());
  return paths;
}

std::vector<std::string> path_edge_ids(const Network& network, const Path& path) {
  std::vector<std::string> ids;
  ids.reserve(path.size());
  for (std::size_t e : path) ids.push_back(network.edge(e).id);
  return ids;
}

std::string path_label(const Network& network, const Path& path) {
  std::string label;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) label += ',';
    label += network.edge(path[i]).id;
  }
  return label;
}

Matrix incidence_matrix(const Network& network, const std::vector<Path>& paths) {
  Matrix delta = Matrix::Zero(static_cast<Eigen::Index>(network.num_edges()), static_cast<Eigen::Index>(paths.size()));
  for (std::size_t p = 0; p < paths.size(); ++p)
    for (std::size_t e : paths[p]) delta(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(p)) += 1.0;
  return delta;
}

Vector edge_flow(const Network& network, const std::vector<Path>& paths, const Vector& path_flow) {
  Vector flow = Vector::Zero(static_cast<Eigen::Index>(network.num_edges()));
  for (std::size_t p = 0; p < paths.size(); ++p)
    for (std::size_t e : paths[p]) flow[static_cast<Eigen::Index>(e)] += path_flow[static_cast<Eigen::Index>(p)];
  return flow;
}

Vector edge_latencies(const Network& network, const Vector& edge_flow) {
  Vector out(static_cast<Eigen::Index>(network.num_edges()));
  for (std::size_t e = 0; e < network.num_edges(); ++e) {
    auto i = static_cast<Eigen::Index>(e);
    out[i] = network.edge(e).latency(edge_flow[i]);
  }
  return out;
}

Vector edge_risks(const Network& network, const Vector& edge_flow) {
  Vector out(static_cast<Eigen::Index>(network.num_edges()));
  for (std::size_t e = 0; e < network.num_edges(); ++e) {
    auto i = static_cast<Eigen::Index>(e);
    out[i] = network.edge(e).risk(edge_flow[i]);
  }
  return out;
}

double path_latency(const Network& network, const Vector& edge_flow, const Path& path) {
  double total = 0.0;
  for (std::size_t e : path) total += network.edge(e).latency(edge_flow[static_cast<Eigen::Index>(e)]);
  return total;
}

double path_risk_sum(const Network& network, const Vector& edge_flow, const Path& path) {
  double total = 0.0;
  for (std::size_t e : path) total += network.edge(e).risk(edge_flow[static_cast<Eigen::Index>(e)]);
  return total;
}

double path_stdev(const Network& network, const Vector& edge_flow, const Path& path) {
  double total = 0.0;
  for (std::size_t e : path) {
    double sigma = network.edge(e).risk(edge_flow[static_cast<Eigen::Index>(e)]);
    total += sigma * sigma;
  }
  return std::sqrt(total);
}

double path_risk(const Instance& instance, const Vector& edge_flow, const Path& path) {
  return instance.risk_model == RiskModel::MeanVar ? path_risk_sum(instance.network, edge_flow, path)
                                                   : path_stdev(instance.network, edge_flow, path);
}

double path_cost(const Instance& instance, const Vector& edge_flow, const Path& path) {
  double latency = path_latency(instance.network, edge_flow, path);
  if (instance.gamma == 0.0) return latency;
  return latency + instance.gamma * path_risk(instance, edge_flow, path);
}

double social_cost(const Network& network, const Vector& edge_flow) {
  double total = 0.0;
  for (std::size_t e = 0; e < network.num_edges(); ++e) {
    double f = edge_flow[static_cast<Eigen::Index>(e)];
    if (f != 0.0) total += f * network.edge(e).latency(f);
  }
  return total;
}

}  // namespace riskroute
