#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "riskroute/network.hpp"

namespace riskroute {

enum class Family { Pigou, Braess, BraessGeneral, Zigzag, RandomSp, RandomGeneral };

const char* to_string(Family family);
std::optional<Family> parse_family(const std::string& text);

/// Generator parameters. Fields not used by a family are ignored.
struct FamilyParams {
  Family family = Family::Pigou;
  RiskModel risk_model = RiskModel::MeanVar;
  double gamma = 1.0;
  /// Pigou: variance of the constant edge. Random families: upper bound on
  /// the risk-to-latency ratio of every edge at every flow.
  double kappa = 1.0;
  /// Braess variance parameter.
  double v = 0.1;
  /// Braess slope; the worst case 2v is used when unset.
  std::optional<double> alpha;
  /// Zigzag horizontal edge count.
  int k = 2;
  /// Number of series/parallel operations for random_sp.
  int budget = 6;
  int nodes = 6;
  int edges = 10;
  int max_degree = 3;
  std::uint64_t seed = 0;
  double demand = 1.0;
};

/// Builds the instance for the family. Throws std::invalid_argument on
/// parameters outside the family's domain (braess: 0 < v <= 1; zigzag: k >= 2).
Instance generate(const FamilyParams& params);

Instance pigou(double gamma, double kappa, RiskModel model = RiskModel::MeanVar);
/// Worst-case Braess instance: l_a = l_d = 2v x, l_b = l_c = 1, l_e = 1 - v,
/// variances v on b and c, gamma = 1.
Instance braess(double v, RiskModel model = RiskModel::MeanVar);
/// l_a = l_d = alpha x, l_e = (1 - alpha) + v; requires 2v <= alpha <= 1 + v.
Instance braess_general(double alpha, double v, RiskModel model = RiskModel::MeanVar);
/// k horizontal unit-slope edges chained by zero-latency connectors.
Instance zigzag(int k);

}  // namespace riskroute
