#include "riskroute/instances.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

namespace riskroute {

const char* to_string(Family family) {
  switch (family) {
    case Family::Pigou:
      return "pigou";
    case Family::Braess:
      return "braess";
    case Family::BraessGeneral:
      return "braess_general";
    case Family::Zigzag:
      return "zigzag";
    case Family::RandomSp:
      return "random_sp";
    case Family::RandomGeneral:
      return "random_general";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& text) {
  for (Family f : {Family::Pigou, Family::Braess, Family::BraessGeneral, Family::Zigzag, Family::RandomSp,
                   Family::RandomGeneral})
    if (text == to_string(f)) return f;
  return std::nullopt;
}

namespace {

std::string fmt_param(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

std::string padded(const char* prefix, std::size_t i, std::size_t total) {
  int width = 1;
  for (std::size_t t = total; t >= 10; t /= 10) ++width;
  std::string digits = std::to_string(i);
  return prefix + std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(width, digits.size()), '0') + digits;
}

struct RawEdge {
  std::size_t tail, head;
};

// Latency: strictly positive constant term plus sparse higher-order terms.
// Risk: coefficientwise at most kappa times the latency coefficient, so the
// risk-to-latency ratio stays below kappa at every flow.
void sample_costs(std::mt19937_64& rng, int max_degree, double kappa, CostPoly& latency, CostPoly& risk) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree_dist(0, std::max(0, max_degree));
  int degree = degree_dist(rng);
  std::vector<double> l(static_cast<std::size_t>(degree) + 1, 0.0), r(l.size(), 0.0);
  l[0] = 0.1 + 0.9 * unit(rng);
  for (std::size_t i = 1; i < l.size(); ++i) l[i] = unit(rng) < 0.7 ? unit(rng) : 0.0;
  bool riskless = unit(rng) < 0.25;
  for (std::size_t i = 0; i < l.size(); ++i) r[i] = riskless ? 0.0 : kappa * unit(rng) * l[i];
  latency = CostPoly(std::move(l));
  risk = CostPoly(std::move(r));
}

Instance assemble(const std::string& name, const std::vector<std::string>& node_ids, const std::vector<RawEdge>& raw,
                  std::mt19937_64& rng, const FamilyParams& params) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Edge edge;
    edge.id = padded("e", i, raw.size());
    edge.tail = node_ids[raw[i].tail];
    edge.head = node_ids[raw[i].head];
    sample_costs(rng, params.max_degree, params.kappa, edge.latency, edge.risk);
    edges.push_back(std::move(edge));
  }
  Instance instance;
  instance.name = name;
  instance.network = Network(node_ids, std::move(edges), node_ids.front(), node_ids.back());
  instance.demand = params.demand;
  instance.gamma = params.gamma;
  instance.risk_model = params.risk_model;
  return instance;
}

Instance random_sp(const FamilyParams& params) {
  if (params.budget < 0) throw std::invalid_argument("random_sp budget must be nonnegative");
  std::mt19937_64 rng(params.seed);
  // Node 0 is the source, node 1 the sink; subdivisions append interior nodes.
  std::size_t next_node = 2;
  std::vector<RawEdge> raw{{0, 1}};
  for (int step = 0; step < params.budget; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, raw.size() - 1);
    std::size_t i = pick(rng);
    if (std::bernoulli_distribution(0.5)(rng)) {
      std::size_t mid = next_node++;
      RawEdge second{mid, raw[i].head};
      raw[i].head = mid;
      raw.insert(raw.begin() + static_cast<std::ptrdiff_t>(i) + 1, second);
    } else {
      raw.insert(raw.begin() + static_cast<std::ptrdiff_t>(i) + 1, raw[i]);
    }
  }
  // Order: source, interior nodes, sink.
  std::vector<std::string> ids(next_node);
  ids[0] = "s";
  for (std::size_t v = 2; v < next_node; ++v) ids[v - 1] = padded("n", v - 1, next_node);
  ids[next_node - 1] = "t";
  std::vector<std::size_t> relabel(next_node);
  relabel[0] = 0;
  relabel[1] = next_node - 1;
  for (std::size_t v = 2; v < next_node; ++v) relabel[v] = v - 1;
  for (RawEdge& e : raw) {
    e.tail = relabel[e.tail];
    e.head = relabel[e.head];
  }
  return assemble("random_sp-" + std::to_string(params.budget) + "-" + std::to_string(params.seed), ids, raw, rng,
                  params);
}

Instance random_general(const FamilyParams& params) {
  const int n = params.nodes;
  if (n < 2) throw std::invalid_argument("random_general needs at least two nodes");
  std::mt19937_64 rng(params.seed);
  std::vector<RawEdge> raw;
  auto pick_between = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t last = static_cast<std::size_t>(n) - 1;
  if (n == 2) raw.push_back({0, 1});
  // Every interior node gets an edge in from an earlier node and out to a
  // later one, so it lies on some source-sink path.
  for (std::size_t v = 1; v < last; ++v) {
    raw.push_back({pick_between(0, v - 1), v});
    raw.push_back({v, pick_between(v + 1, last)});
  }
  while (raw.size() < static_cast<std::size_t>(std::max(params.edges, 1))) {
    std::size_t a = pick_between(0, last - 1);
    std::size_t b = pick_between(a + 1, last);
    raw.push_back({a, b});
  }
  std::vector<std::string> ids(static_cast<std::size_t>(n));
  ids[0] = "s";
  for (std::size_t v = 1; v < last; ++v) ids[v] = padded("n", v, last);
  ids[last] = "t";
  return assemble("random_general-" + std::to_string(n) + "-" + std::to_string(params.edges) + "-" +
                      std::to_string(params.seed),
                  ids, raw, rng, params);
}

Edge make_edge(std::string id, std::string tail, std::string head, CostPoly latency, CostPoly risk) {
  return Edge{std::move(id), std::move(tail), std::move(head), std::move(latency), std::move(risk)};
}

}  // namespace

Instance pigou(double gamma, double kappa, RiskModel model) {
  if (!(gamma >= 0.0) || !(kappa >= 0.0)) throw std::invalid_argument("pigou requires gamma >= 0 and kappa >= 0");
  Instance instance;
  instance.name = "pigou-" + fmt_param(gamma) + "-" + fmt_param(kappa);
  std::vector<Edge> edges{make_edge("e1", "s", "t", {0.0, 1.0 + gamma * kappa}, {0.0}),
                          make_edge("e2", "s", "t", {1.0}, {kappa})};
  instance.network = Network({"s", "t"}, std::move(edges), "s", "t");
  instance.demand = 1.0;
  instance.gamma = gamma;
  instance.risk_model = model;
  return instance;
}

Instance braess_general(double alpha, double v, RiskModel model) {
  if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("braess requires 0 < v <= 1");
  if (!(alpha >= 2.0 * v && alpha <= 1.0 + v))
    throw std::invalid_argument("braess_general requires 2v <= alpha <= 1 + v");
  Instance instance;
  instance.name = "braess-" + fmt_param(alpha) + "-" + fmt_param(v);
  std::vector<Edge> edges{
      make_edge("a", "s", "u", {0.0, alpha}, {0.0}), make_edge("b", "u", "t", {1.0}, {v}),
      make_edge("c", "s", "w", {1.0}, {v}),         make_edge("d", "w", "t", {0.0, alpha}, {0.0}),
      make_edge("e", "u", "w", {1.0 - alpha + v}, {0.0}),
  };
  instance.network = Network({"s", "u", "w", "t"}, std::move(edges), "s", "t");
  instance.demand = 1.0;
  instance.gamma = 1.0;
  instance.risk_model = model;
  return instance;
}

Instance braess(double v, RiskModel model) {
  Instance instance = braess_general(2.0 * v, v, model);
  instance.name = "braess-" + fmt_param(v);
  return instance;
}

Instance zigzag(int k) {
  if (k < 2) throw std::invalid_argument("zigzag requires k >= 2");
  std::vector<std::string> nodes{"s"};
  for (int i = 1; i <= k; ++i) nodes.push_back("u" + std::to_string(i));
  for (int i = 1; i <= k; ++i) nodes.push_back("w" + std::to_string(i));
  nodes.push_back("t");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    std::string u = "u" + std::to_string(i), w = "w" + std::to_string(i);
    edges.push_back(make_edge("h" + std::to_string(i), u, w, {0.0, 1.0}, {0.0}));
    edges.push_back(make_edge("in" + std::to_string(i), "s", u, {0.0}, {0.0}));
    edges.push_back(make_edge("out" + std::to_string(i), w, "t", {0.0}, {0.0}));
    if (i < k) edges.push_back(make_edge("z" + std::to_string(i), w, "u" + std::to_string(i + 1), {0.0}, {0.0}));
  }
  Instance instance;
  instance.name = "zigzag-" + std::to_string(k);
  instance.network = Network(std::move(nodes), std::move(edges), "s", "t");
  instance.demand = 1.0;
  instance.gamma = 0.0;
  instance.risk_model = RiskModel::MeanVar;
  return instance;
}

Instance generate(const FamilyParams& params) {
  if (!(params.demand > 0.0)) throw std::invalid_argument("demand must be positive");
  Instance instance;
  switch (params.family) {
    case Family::Pigou:
      instance = pigou(params.gamma, params.kappa, params.risk_model);
      break;
    case Family::Braess:
      instance = braess(params.v, params.risk_model);
      break;
    case Family::BraessGeneral:
      instance = braess_general(params.alpha.value_or(2.0 * params.v), params.v, params.risk_model);
      break;
    case Family::Zigzag:
      instance = zigzag(params.k);
      break;
    case Family::RandomSp:
      return random_sp(params);
    case Family::RandomGeneral:
      return random_general(params);
  }
  instance.demand = params.demand;
  return instance;
}

}  // namespace riskroute
