#include "riskroute/series_parallel.hpp"

#include <map>
#include <utility>

namespace riskroute {

std::vector<std::size_t> SpTree::leaves() const {
  std::vector<std::size_t> out;
  if (nodes.empty()) return out;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const Node& node = nodes[stack.back()];
    stack.pop_back();
    if (node.kind == Kind::Leaf) {
      out.push_back(node.edge);
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }
  return out;
}

std::string SpTree::to_string(const Network& network) const {
  auto render = [&](auto&& self, std::size_t i) -> std::string {
    const Node& node = nodes[i];
    switch (node.kind) {
      case Kind::Leaf:
        return network.edge(node.edge).id;
      case Kind::Series:
        return "series(" + self(self, node.left) + ", " + self(self, node.right) + ")";
      case Kind::Parallel:
        return "parallel(" + self(self, node.left) + ", " + self(self, node.right) + ")";
    }
    return {};
  };
  return nodes.empty() ? std::string{} : render(render, root);
}

namespace {

struct SuperEdge {
  std::size_t tail, head, tree;
  bool alive = true;
};

}  // namespace

SpDecomposition sp_decompose(const Network& network) {
  if (network.num_edges() == 0) return std::nullopt;

  SpTree tree;
  std::vector<SuperEdge> edges;
  for (std::size_t e = 0; e < network.num_edges(); ++e) {
    tree.nodes.push_back({SpTree::Kind::Leaf, e, 0, 0});
    edges.push_back({network.tail(e), network.head(e), e});
  }
  // Process edges in id order so the tree shape is reproducible.
  std::vector<std::size_t> order(network.num_edges());
  for (std::size_t e = 0; e < order.size(); ++e) order[network.edge_rank(e)] = e;
  std::vector<SuperEdge> sorted;
  for (std::size_t e : order) sorted.push_back(edges[e]);
  edges = std::move(sorted);

  auto combine = [&](SpTree::Kind kind, std::size_t a, std::size_t b) {
    tree.nodes.push_back({kind, 0, a, b});
    return tree.nodes.size() - 1;
  };

  const std::size_t s = network.source(), t = network.sink();
  std::size_t alive = edges.size();
  bool changed = true;
  while (changed && alive > 1) {
    changed = false;

    // Parallel reductions: merge super-edges sharing (tail, head).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> first;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edges[i].alive) continue;
      auto key = std::make_pair(edges[i].tail, edges[i].head);
      auto [it, inserted] = first.emplace(key, i);
      if (!inserted) {
        SuperEdge& keep = edges[it->second];
        keep.tree = combine(SpTree::Kind::Parallel, keep.tree, edges[i].tree);
        edges[i].alive = false;
        --alive;
        changed = true;
      }
    }

    // Series reductions at interior nodes of in-degree 1 and out-degree 1.
    std::vector<std::vector<std::size_t>> in(network.num_nodes()), out(network.num_nodes());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edges[i].alive) continue;
      out[edges[i].tail].push_back(i);
      in[edges[i].head].push_back(i);
    }
    for (std::size_t v = 0; v < network.num_nodes(); ++v) {
      if (v == s || v == t) continue;
      if (in[v].size() != 1 || out[v].size() != 1) continue;
      std::size_t a = in[v][0], b = out[v][0];
      if (!edges[a].alive || !edges[b].alive || a == b) continue;
      if (edges[a].head != v || edges[b].tail != v) continue;
      edges[a].tree = combine(SpTree::Kind::Series, edges[a].tree, edges[b].tree);
      edges[a].head = edges[b].head;
      edges[b].alive = false;
      --alive;
      changed = true;
      // Adjacency lists are stale now; rebuild on the next sweep.
      break;
    }
  }

  if (alive != 1) return std::nullopt;
  for (const SuperEdge& edge : edges) {
    if (!edge.alive) continue;
    if (edge.tail != s || edge.head != t) return std::nullopt;
    tree.root = edge.tree;
  }
  return tree;
}

}  // namespace riskroute

namespace riskroute {

std::optional<BraessLabels> braess_labeling(const Network& network) {
  if (network.num_nodes() != 4 || network.num_edges() != 5) return std::nullopt;
  const std::size_t s = network.source(), t = network.sink();
  std::optional<std::size_t> cross;
  for (std::size_t e = 0; e < network.num_edges(); ++e) {
    std::size_t u = network.tail(e), w = network.head(e);
    if (u != s && u != t && w != s && w != t) {
      if (cross) return std::nullopt;
      cross = e;
    }
  }
  if (!cross) return std::nullopt;
  const std::size_t u = network.tail(*cross), w = network.head(*cross);
  auto unique_edge = [&](std::size_t from, std::size_t to) -> std::optional<std::size_t> {
    std::optional<std::size_t> found;
    for (std::size_t e : network.out_edges(from)) {
      if (network.head(e) != to) continue;
      if (found) return std::nullopt;
      found = e;
    }
    return found;
  };
  auto a = unique_edge(s, u), b = unique_edge(u, t), c = unique_edge(s, w), d = unique_edge(w, t);
  if (!a || !b || !c || !d) return std::nullopt;
  return BraessLabels{*a, *b, *c, *d, *cross};
}

}  // namespace riskroute
