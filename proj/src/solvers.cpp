#include "riskroute/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>

#include "riskroute/shortest_path.hpp"

namespace riskroute {

const char* to_string(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::RiskNeutral:
      return "risk-neutral";
    case ObjectiveMode::MeanVar:
      return "mean-var";
    case ObjectiveMode::MeanStdev:
      return "mean-stdev";
  }
  return "?";
}

double Flow::flow_on(const Path& path) const {
  for (std::size_t p = 0; p < paths.size(); ++p)
    if (paths[p] == path) return path_flow[static_cast<Eigen::Index>(p)];
  return 0.0;
}

Flow make_flow(const Network& network, std::vector<Path> paths, Vector path_flow, ObjectiveMode mode) {
  Flow flow;
  flow.edge_flow = edge_flow(network, paths, path_flow);
  flow.paths = std::move(paths);
  flow.path_flow = std::move(path_flow);
  flow.mode = mode;
  return flow;
}

namespace {

double mode_gamma(const Instance& instance, ObjectiveMode mode) {
  return mode == ObjectiveMode::RiskNeutral ? 0.0 : instance.gamma;
}

// Drops zero-flow paths and packages the rest.
Flow pack_flow(const Network& network, const std::vector<Path>& paths, const std::vector<double>& flows,
               ObjectiveMode mode) {
  std::vector<Path> kept;
  std::vector<double> values;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (flows[p] > 0.0) {
      kept.push_back(paths[p]);
      values.push_back(flows[p]);
    }
  }
  Vector path_flow = Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
  return make_flow(network, std::move(kept), std::move(path_flow), mode);
}

Vector flows_to_edges(const Network& network, const std::vector<Path>& paths, const std::vector<double>& flows) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(network.num_edges()));
  for (std::size_t p = 0; p < paths.size(); ++p)
    if (flows[p] != 0.0)
      for (std::size_t e : paths[p]) out[static_cast<Eigen::Index>(e)] += flows[p];
  return out;
}

// Paths carrying more than this share of the demand count as used when
// certifying that every used path is (near) cheapest.
constexpr double kUsedPathShare = 1e-7;

// Relative excess of the dearest used path over the cheapest path, absolute
// when the cheapest costs nothing.
double path_excess(double used_max, double min_cost) {
  if (!(used_max > min_cost)) return 0.0;
  double excess = used_max - min_cost;
  return min_cost > 0.0 ? excess / min_cost : excess;
}

Gap make_gap(double weighted, double demand, double min_cost) {
  Gap gap;
  double excess = weighted - demand * min_cost;
  if (min_cost > 0.0) {
    gap.value = excess / (demand * min_cost);
  } else {
    gap.value = excess;
    gap.absolute = true;
  }
  // Round-off can make the excess marginally negative at an exact equilibrium.
  gap.value = std::max(gap.value, 0.0);
  return gap;
}

}  // namespace

double mode_path_cost(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow, const Path& path) {
  const Network& net = instance.network;
  double latency = path_latency(net, edge_flow, path);
  double gamma = mode_gamma(instance, mode);
  if (gamma == 0.0) return latency;
  if (mode == ObjectiveMode::MeanVar) return latency + gamma * path_risk_sum(net, edge_flow, path);
  return latency + gamma * path_stdev(net, edge_flow, path);
}

Vector separable_edge_costs(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow) {
  assert(mode != ObjectiveMode::MeanStdev);
  const Network& net = instance.network;
  Vector costs = edge_latencies(net, edge_flow);
  double gamma = mode_gamma(instance, mode);
  if (gamma != 0.0) costs += gamma * edge_risks(net, edge_flow);
  return costs;
}

double potential(const Instance& instance, ObjectiveMode mode, const Vector& edge_flow) {
  const Network& net = instance.network;
  double gamma = mode_gamma(instance, mode);
  double total = 0.0;
  for (std::size_t e = 0; e < net.num_edges(); ++e) {
    double f = edge_flow[static_cast<Eigen::Index>(e)];
    total += net.edge(e).latency.antiderivative(f);
    if (gamma != 0.0) total += gamma * net.edge(e).risk.antiderivative(f);
  }
  return total;
}

Gap relative_gap(const Instance& instance, const Flow& flow, ObjectiveMode mode) {
  const Network& net = instance.network;
  double weighted = 0.0;
  for (std::size_t p = 0; p < flow.paths.size(); ++p) {
    double f = flow.path_flow[static_cast<Eigen::Index>(p)];
    if (f != 0.0) weighted += f * mode_path_cost(instance, mode, flow.edge_flow, flow.paths[p]);
  }
  double min_cost;
  if (mode == ObjectiveMode::MeanStdev && instance.gamma != 0.0) {
    min_cost = std::numeric_limits<double>::infinity();
    for (const Path& path : enumerate_simple_paths(net))
      min_cost = std::min(min_cost, mode_path_cost(instance, mode, flow.edge_flow, path));
  } else {
    ObjectiveMode separable = mode == ObjectiveMode::MeanStdev ? ObjectiveMode::RiskNeutral : mode;
    min_cost = shortest_path(net, separable_edge_costs(instance, separable, flow.edge_flow)).cost;
  }
  return make_gap(weighted, flow.total(), min_cost);
}

EquilibriumResult solve_wardrop(const Instance& instance, ObjectiveMode mode, const SolverOptions& options) {
  if (mode == ObjectiveMode::MeanStdev)
    throw std::invalid_argument("solve_wardrop handles the separable objectives only");
  if (mode == ObjectiveMode::MeanVar && instance.risk_model != RiskModel::MeanVar)
    throw std::invalid_argument("mean-var equilibrium requested on a mean-stdev instance");

  const Network& net = instance.network;
  const double demand = instance.demand;
  const double gamma = mode_gamma(instance, mode);
  auto edge_cost = [&](std::size_t e, double f) {
    double c = net.edge(e).latency(f);
    if (gamma != 0.0) c += gamma * net.edge(e).risk(f);
    return c;
  };

  std::vector<Path> paths;
  std::vector<double> flows;
  std::map<Path, std::size_t> index;
  auto path_index = [&](const Path& path) {
    auto [it, inserted] = index.emplace(path, paths.size());
    if (inserted) {
      paths.push_back(path);
      flows.push_back(0.0);
    }
    return it->second;
  };

  // All-or-nothing start on the free-flow shortest path.
  Vector ef = Vector::Zero(static_cast<Eigen::Index>(net.num_edges()));
  ShortestPath start = shortest_path(net, separable_edge_costs(instance, mode, ef));
  if (!start.found()) throw std::invalid_argument("sink unreachable");
  flows[path_index(start.path)] = demand;

  EquilibriumResult result;
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<double> best_flows;
  std::vector<int> direction(net.num_edges(), 0);

  for (std::size_t it = 0;; ++it) {
    ef = flows_to_edges(net, paths, flows);
    if (options.potential_trace) {
      options.potential_trace->push_back(potential(instance, mode, ef));
    }
    Vector costs = separable_edge_costs(instance, mode, ef);
    ShortestPath sp = shortest_path(net, costs);

    double weighted = 0.0;
    std::size_t away = paths.size();
    double away_cost = -std::numeric_limits<double>::infinity();
    double used_max = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (flows[p] <= 0.0) continue;
      double c = 0.0;
      for (std::size_t e : paths[p]) c += costs[static_cast<Eigen::Index>(e)];
      weighted += flows[p] * c;
      if (c > away_cost) {
        away_cost = c;
        away = p;
      }
      if (flows[p] > kUsedPathShare * demand) used_max = std::max(used_max, c);
    }
    Gap gap = make_gap(weighted, demand, sp.cost);
    if (gap.value < best_gap) {
      best_gap = gap.value;
      best_flows = flows;
      result.gap_is_absolute = gap.absolute;
    }
    result.iterations = it;
    if (gap.value <= options.tol && path_excess(used_max, sp.cost) <= options.tol) {
      result.converged = true;
      break;
    }
    if (it >= options.max_iter) break;

    std::size_t toward = path_index(sp.path);
    if (toward == away) break;

    // Pairwise step: move flow from the most expensive used path to the
    // all-or-nothing target, step chosen by bisection on the directional
    // derivative of the potential.
    for (std::size_t e : paths[toward]) direction[e] += 1;
    for (std::size_t e : paths[away]) direction[e] -= 1;
    auto slope = [&](double step) {
      double g = 0.0;
      for (std::size_t e : paths[toward])
        if (direction[e] != 0) g += edge_cost(e, ef[static_cast<Eigen::Index>(e)] + step);
      for (std::size_t e : paths[away])
        if (direction[e] != 0) g -= edge_cost(e, ef[static_cast<Eigen::Index>(e)] - step);
      return g;
    };
    const double limit = flows[away];
    double step = limit;
    if (slope(limit) > 0.0) {
      double lo = 0.0, hi = limit;
      for (int k = 0; k < 60; ++k) {
        double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? hi : lo) = mid;
      }
      step = 0.5 * (lo + hi);
    }
    for (std::size_t e : paths[toward]) direction[e] = 0;
    for (std::size_t e : paths[away]) direction[e] = 0;

    if (step >= limit) {
      flows[toward] += flows[away];
      flows[away] = 0.0;
    } else {
      flows[away] -= step;
      flows[toward] += step;
    }
  }

  result.flow = pack_flow(net, paths, result.converged ? flows : best_flows, mode);
  Gap final_gap = relative_gap(instance, result.flow, mode);
  result.relative_gap = final_gap.value;
  result.gap_is_absolute = final_gap.absolute;
  return result;
}

EquilibriumResult solve_rawe_meanstdev(const Instance& instance, const SolverOptions& options) {
  if (instance.risk_model != RiskModel::MeanStdev)
    throw std::invalid_argument("mean-stdev equilibrium requested on a mean-var instance");
  const Network& net = instance.network;
  const double demand = instance.demand;
  const ObjectiveMode mode = ObjectiveMode::MeanStdev;
  const std::vector<Path> paths = enumerate_simple_paths(net, options.path_cap);
  if (paths.empty()) throw std::invalid_argument("sink unreachable");
  const std::size_t np = paths.size();

  std::vector<double> flows(np, 0.0);
  Vector ef = Vector::Zero(static_cast<Eigen::Index>(net.num_edges()));
  auto costs_at = [&](const Vector& edge_flow) {
    std::vector<double> q(np);
    for (std::size_t p = 0; p < np; ++p) q[p] = mode_path_cost(instance, mode, edge_flow, paths[p]);
    return q;
  };
  {
    auto q = costs_at(ef);
    flows[static_cast<std::size_t>(std::min_element(q.begin(), q.end()) - q.begin())] = demand;
  }

  const double floor = 1e-12 * demand;
  double shift_cap = demand;
  std::size_t last_hi = np, last_lo = np, repeats = 0;
  double last_gap = std::numeric_limits<double>::infinity();
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<double> best_flows = flows;
  EquilibriumResult result;

  for (std::size_t it = 0;; ++it) {
    ef = flows_to_edges(net, paths, flows);
    auto q = costs_at(ef);
    std::size_t lo = 0, hi = np;
    double weighted = 0.0;
    double used_max = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < np; ++p) {
      if (q[p] < q[lo]) lo = p;
      if (flows[p] > 0.0) {
        weighted += flows[p] * q[p];
        if (hi == np || q[p] > q[hi]) hi = p;
      }
      if (flows[p] > kUsedPathShare * demand) used_max = std::max(used_max, q[p]);
    }
    Gap gap = make_gap(weighted, demand, q[lo]);
    if (gap.value < best_gap) {
      best_gap = gap.value;
      best_flows = flows;
    }
    result.iterations = it;
    if (gap.value <= options.tol && path_excess(used_max, q[lo]) <= options.tol) {
      result.converged = true;
      break;
    }
    if (it >= options.max_iter || hi == lo) break;

    if (hi == last_hi && lo == last_lo && !(gap.value < last_gap)) {
      if (++repeats >= 100) {
        shift_cap *= 0.5;
        repeats = 0;
      }
    } else {
      repeats = 0;
    }
    last_hi = hi;
    last_lo = lo;
    last_gap = gap.value;

    // Shift flow from hi to lo until their costs cross.
    Vector trial = ef;
    auto difference = [&](double step) {
      trial = ef;
      for (std::size_t e : paths[hi]) trial[static_cast<Eigen::Index>(e)] -= step;
      for (std::size_t e : paths[lo]) trial[static_cast<Eigen::Index>(e)] += step;
      return mode_path_cost(instance, mode, trial, paths[hi]) - mode_path_cost(instance, mode, trial, paths[lo]);
    };
    const double limit = std::min(flows[hi], shift_cap);
    double step = limit;
    if (difference(limit) < 0.0) {
      double a = 0.0, b = limit;
      for (int k = 0; k < 60; ++k) {
        double mid = 0.5 * (a + b);
        (difference(mid) < 0.0 ? b : a) = mid;
      }
      step = 0.5 * (a + b);
    }
    step = std::max(step, std::min(floor, flows[hi]));
    if (step >= flows[hi]) {
      flows[lo] += flows[hi];
      flows[hi] = 0.0;
    } else {
      flows[hi] -= step;
      flows[lo] += step;
    }
  }

  result.flow = pack_flow(net, paths, result.converged ? flows : best_flows, mode);
  Gap final_gap = relative_gap(instance, result.flow, mode);
  result.relative_gap = final_gap.value;
  result.gap_is_absolute = final_gap.absolute;
  return result;
}

EquilibriumResult solve_rnwe(const Instance& instance, const SolverOptions& options) {
  return solve_wardrop(instance, ObjectiveMode::RiskNeutral, options);
}

EquilibriumResult solve_rawe(const Instance& instance, const SolverOptions& options) {
  if (instance.risk_model == RiskModel::MeanVar) return solve_wardrop(instance, ObjectiveMode::MeanVar, options);
  return solve_rawe_meanstdev(instance, options);
}

Flow decompose_edge_flow(const Network& network, const Vector& edge_flow, double demand) {
  const double conservation_tol = 1e-9 * std::max(1.0, demand);
  for (std::size_t v = 0; v < network.num_nodes(); ++v) {
    double net_out = 0.0;
    for (std::size_t e : network.out_edges(v)) net_out += edge_flow[static_cast<Eigen::Index>(e)];
    for (std::size_t e : network.in_edges(v)) net_out -= edge_flow[static_cast<Eigen::Index>(e)];
    double expected = v == network.source() ? demand : v == network.sink() ? -demand : 0.0;
    if (std::abs(net_out - expected) > conservation_tol)
      throw ConservationError("flow conservation violated at node '" + network.nodes()[v] + "'");
  }

  Vector residual = edge_flow;
  const double positive = 1e-14 * std::max(1.0, demand);
  std::vector<Path> paths;
  std::vector<double> flows;
  std::vector<bool> on_path(network.num_nodes(), false);

  // Lexicographically-first path through edges of positive residual.
  auto first_path = [&](auto&& self, std::size_t v, Path& path) -> bool {
    if (v == network.sink()) return true;
    on_path[v] = true;
    for (std::size_t e : network.out_edges(v)) {
      std::size_t w = network.head(e);
      if (on_path[w] || residual[static_cast<Eigen::Index>(e)] <= positive) continue;
      path.push_back(e);
      if (self(self, w, path)) {
        on_path[v] = false;
        return true;
      }
      path.pop_back();
    }
    on_path[v] = false;
    return false;
  };

  for (;;) {
    Path path;
    if (!first_path(first_path, network.source(), path)) break;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (std::size_t e : path) bottleneck = std::min(bottleneck, residual[static_cast<Eigen::Index>(e)]);
    for (std::size_t e : path) {
      auto i = static_cast<Eigen::Index>(e);
      residual[i] = residual[i] == bottleneck ? 0.0 : residual[i] - bottleneck;
    }
    paths.push_back(std::move(path));
    flows.push_back(bottleneck);
  }
  if (residual.size() > 0 && residual.cwiseAbs().maxCoeff() > 1e-10)
    throw ConservationError("residual flow left after decomposition (cycle or inconsistent flow)");

  Vector path_flow = Eigen::Map<const Vector>(flows.data(), static_cast<Eigen::Index>(flows.size()));
  return make_flow(network, std::move(paths), std::move(path_flow), ObjectiveMode::RiskNeutral);
}

}  // namespace riskroute
