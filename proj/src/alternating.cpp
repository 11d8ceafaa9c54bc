#include "riskroute/alternating.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "riskroute/series_parallel.hpp"

namespace riskroute {

std::vector<std::size_t> EdgePartition::members(EdgeClass which) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < classes.size(); ++e)
    if (classes[e] == which) out.push_back(e);
  return out;
}

std::vector<std::string> EdgePartition::member_ids(const Network& network, EdgeClass which) const {
  std::vector<std::string> ids;
  for (std::size_t e : members(which)) ids.push_back(network.edge(e).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

EdgePartition classify_edges(const Vector& x_edge_flow, const Vector& z_edge_flow, double eps) {
  EdgePartition partition;
  partition.eps = eps;
  partition.classes.resize(static_cast<std::size_t>(x_edge_flow.size()));
  for (Eigen::Index i = 0; i < x_edge_flow.size(); ++i) {
    double x = x_edge_flow[i], z = z_edge_flow[i];
    EdgeClass cls;
    if (z > eps && z >= x - eps) {
      cls = EdgeClass::A;
    } else if (z < x - eps) {
      cls = EdgeClass::B;
    } else {
      // Both flows are within a couple of eps of zero.
      cls = EdgeClass::Removed;
    }
    partition.classes[static_cast<std::size_t>(i)] = cls;
  }
  return partition;
}

std::size_t AlternatingPath::backward_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [](const Arc& a) { return a.direction == ArcDirection::Backward; }));
}

std::string AlternatingPath::to_string(const Network& network) const {
  std::string out = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ", ";
    out += network.edge(arcs[i].edge).id;
    out += arcs[i].direction == ArcDirection::Forward ? "+" : "-";
  }
  return out + "]";
}

int count_forward_runs(const std::vector<Arc>& arcs) {
  int runs = 0;
  bool in_forward = false;
  for (const Arc& arc : arcs) {
    bool forward = arc.direction == ArcDirection::Forward;
    if (forward && !in_forward) ++runs;
    in_forward = forward;
  }
  return runs;
}

namespace {

std::size_t arc_start(const Network& net, const Arc& arc) {
  return arc.direction == ArcDirection::Forward ? net.tail(arc.edge) : net.head(arc.edge);
}
std::size_t arc_end(const Network& net, const Arc& arc) {
  return arc.direction == ArcDirection::Forward ? net.head(arc.edge) : net.tail(arc.edge);
}

// Residual arcs leaving v, in edge-id order.
std::vector<Arc> residual_arcs(const EdgePartition& partition, const Network& net, std::size_t v) {
  std::vector<Arc> arcs;
  for (std::size_t e : net.out_edges(v))
    if (partition[e] == EdgeClass::A) arcs.push_back({e, ArcDirection::Forward});
  for (std::size_t e : net.in_edges(v))
    if (partition[e] == EdgeClass::B) arcs.push_back({e, ArcDirection::Backward});
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& x, const Arc& y) { return net.edge_rank(x.edge) < net.edge_rank(y.edge); });
  return arcs;
}

}  // namespace

AlternatingPath find_alternating_path(const EdgePartition& partition, const Network& network) {
  // State = (node, how it was entered: 0 start, 1 forward, 2 backward).
  // Cost = (forward runs opened, arcs used), compared lexicographically.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t n = network.num_nodes();
  const std::size_t states = 3 * n;
  using Cost = std::pair<int, std::size_t>;
  const Cost kInf{std::numeric_limits<int>::max(), kNone};
  std::vector<Cost> best(states, kInf);
  std::vector<std::size_t> pred_state(states, kNone);
  std::vector<Arc> pred_arc(states, Arc{0, ArcDirection::Forward});
  std::vector<bool> done(states, false);

  using Label = std::tuple<int, std::size_t, std::size_t, std::size_t>;  // runs, arcs, rank, state
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  const std::size_t start = 3 * network.source();
  best[start] = {0, 0};
  queue.emplace(0, 0, network.node_rank(network.source()), start);

  std::size_t goal = kNone;
  while (!queue.empty()) {
    auto [runs, length, rank, state] = queue.top();
    queue.pop();
    if (done[state]) continue;
    done[state] = true;
    const std::size_t v = state / 3, entered = state % 3;
    if (v == network.sink()) {
      goal = state;
      break;
    }
    for (const Arc& arc : residual_arcs(partition, network, v)) {
      bool forward = arc.direction == ArcDirection::Forward;
      std::size_t w = arc_end(network, arc);
      std::size_t next = 3 * w + (forward ? 1 : 2);
      Cost cost{runs + ((forward && entered != 1) ? 1 : 0), length + 1};
      if (!done[next] && cost < best[next]) {
        best[next] = cost;
        pred_state[next] = state;
        pred_arc[next] = arc;
        queue.emplace(cost.first, cost.second, network.node_rank(w), next);
      }
    }
  }
  if (goal == kNone)
    throw AlternatingPathError("no alternating path from source to sink; inputs are not a pair of equilibria");

  std::vector<Arc> walk;
  for (std::size_t s = goal; s != start; s = pred_state[s]) walk.push_back(pred_arc[s]);
  std::reverse(walk.begin(), walk.end());

  // Splice out any revisited node; this never increases the run count.
  std::vector<Arc> simple;
  std::vector<std::size_t> nodes{network.source()};
  for (const Arc& arc : walk) {
    std::size_t w = arc_end(network, arc);
    auto seen = std::find(nodes.begin(), nodes.end(), w);
    if (seen != nodes.end()) {
      std::size_t keep = static_cast<std::size_t>(seen - nodes.begin());
      nodes.resize(keep + 1);
      simple.resize(keep);
    } else {
      nodes.push_back(w);
      simple.push_back(arc);
    }
  }

  AlternatingPath path;
  path.arcs = std::move(simple);
  path.forward_runs = count_forward_runs(path.arcs);
  return path;
}

bool is_valid_alternating_path(const AlternatingPath& path, const EdgePartition& partition, const Network& network) {
  std::vector<bool> visited(network.num_nodes(), false);
  std::size_t v = network.source();
  visited[v] = true;
  for (const Arc& arc : path.arcs) {
    EdgeClass expected = arc.direction == ArcDirection::Forward ? EdgeClass::A : EdgeClass::B;
    if (partition[arc.edge] != expected) return false;
    if (arc_start(network, arc) != v) return false;
    v = arc_end(network, arc);
    if (visited[v]) return false;
    visited[v] = true;
  }
  return v == network.sink() && path.forward_runs == count_forward_runs(path.arcs);
}

double alternating_bound_expression(const Network& network, const Vector& edge_flow, const AlternatingPath& path,
                                    double forward_scale) {
  double forward = 0.0, backward = 0.0;
  for (const Arc& arc : path.arcs) {
    double latency = network.edge(arc.edge).latency(edge_flow[static_cast<Eigen::Index>(arc.edge)]);
    (arc.direction == ArcDirection::Forward ? forward : backward) += latency;
  }
  return forward_scale * forward - backward;
}

double lemma1_rhs(const Instance& instance, const Vector& x_edge_flow, const AlternatingPath& path, double kappa) {
  if (instance.risk_model == RiskModel::MeanStdev && path.backward_count() > 0 &&
      !braess_labeling(instance.network))
    throw std::domain_error("alternating-path bound for mean-stdev is only established on Braess networks");
  return alternating_bound_expression(instance.network, x_edge_flow, path, 1.0 + instance.gamma * kappa);
}

double lemma2_rhs(const Instance& instance, const Vector& z_edge_flow, const AlternatingPath& path) {
  return alternating_bound_expression(instance.network, z_edge_flow, path, 1.0);
}

double theoretical_pra_bound(double gamma, double kappa, int eta) {
  if (gamma == 0.0 || kappa == 0.0 || eta == 0) return 1.0;
  return 1.0 + gamma * kappa * static_cast<double>(eta);
}

int worst_case_eta(std::size_t num_nodes) {
  return num_nodes < 2 ? 0 : static_cast<int>(num_nodes / 2);  // ceil((n-1)/2) == floor(n/2)
}

int exhaustive_min_forward_runs(const EdgePartition& partition, const Network& network) {
  int best = -1;
  std::vector<bool> visited(network.num_nodes(), false);
  std::vector<Arc> arcs;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == network.sink()) {
      int runs = count_forward_runs(arcs);
      if (best < 0 || runs < best) best = runs;
      return;
    }
    auto step = [&](std::size_t e, std::size_t next, ArcDirection dir) {
      if (visited[next]) return;
      visited[next] = true;
      arcs.push_back({e, dir});
      self(self, next);
      arcs.pop_back();
      visited[next] = false;
    };
    for (std::size_t e : network.out_edges(v))
      if (partition[e] == EdgeClass::A) step(e, network.head(e), ArcDirection::Forward);
    for (std::size_t e : network.in_edges(v))
      if (partition[e] == EdgeClass::B) step(e, network.tail(e), ArcDirection::Backward);
  };
  visited[network.source()] = true;
  walk(walk, network.source());
  return best;
}

}  // namespace riskroute
