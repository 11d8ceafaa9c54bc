#pragma once

#include <limits>

#include "riskroute/network.hpp"

namespace riskroute {

struct ShortestPath {
  double cost = std::numeric_limits<double>::infinity();
  Path path;
  bool found() const { return cost < std::numeric_limits<double>::infinity(); }
};

/// Label-setting shortest source->sink path under nonnegative edge costs.
///
/// Nodes are settled in (distance, node-id) order and a label is only replaced
/// on strict improvement, so ties resolve the same way on every run.
ShortestPath shortest_path(const Network& network, const Vector& edge_costs);

}  // namespace riskroute
