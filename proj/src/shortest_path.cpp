#include "riskroute/shortest_path.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <tuple>

namespace riskroute {

ShortestPath shortest_path(const Network& network, const Vector& edge_costs) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t n = network.num_nodes();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> pred(n, kNone);
  std::vector<bool> settled(n, false);

  using Label = std::tuple<double, std::size_t, std::size_t>;  // distance, node rank, node
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  dist[network.source()] = 0.0;
  queue.emplace(0.0, network.node_rank(network.source()), network.source());

  while (!queue.empty()) {
    auto [d, rank, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = true;
    if (v == network.sink()) break;
    for (std::size_t e : network.out_edges(v)) {
      double c = edge_costs[static_cast<Eigen::Index>(e)];
      assert(c >= 0.0 && "negative edge cost");
      std::size_t w = network.head(e);
      if (settled[w]) continue;
      if (d + c < dist[w]) {
        dist[w] = d + c;
        pred[w] = e;
        queue.emplace(dist[w], network.node_rank(w), w);
      }
    }
  }

  ShortestPath result;
  if (dist[network.sink()] == kInf) return result;
  result.cost = dist[network.sink()];
  for (std::size_t v = network.sink(); v != network.source();) {
    std::size_t e = pred[v];
    result.path.push_back(e);
    v = network.tail(e);
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace riskroute
