#pragma once

#include <string>
#include <vector>

#include "riskroute/network.hpp"

namespace testsupport {

using riskroute::CostPoly;
using riskroute::Edge;
using riskroute::Instance;
using riskroute::Network;

inline Edge edge(std::string id, std::string tail, std::string head, CostPoly latency, CostPoly risk = CostPoly{0.0}) {
  return Edge{std::move(id), std::move(tail), std::move(head), std::move(latency), std::move(risk)};
}

inline Instance instance(Network net, double gamma = 0.0,
                         riskroute::RiskModel model = riskroute::RiskModel::MeanVar, double demand = 1.0) {
  Instance in;
  in.name = "test";
  in.network = std::move(net);
  in.gamma = gamma;
  in.risk_model = model;
  in.demand = demand;
  return in;
}

/// Two parallel edges s->t with latencies x and 1.
inline Network parallel_pair() {
  return Network({"s", "t"}, {edge("e1", "s", "t", {0.0, 1.0}), edge("e2", "s", "t", {1.0})}, "s", "t");
}

inline Network series_pair() {
  return Network({"s", "m", "t"}, {edge("e1", "s", "m", {0.0, 1.0}), edge("e2", "m", "t", {1.0})}, "s", "t");
}

inline riskroute::Vector vec(std::initializer_list<double> values) {
  riskroute::Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace testsupport
