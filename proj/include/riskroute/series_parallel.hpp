#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riskroute/network.hpp"

namespace riskroute {

/// Binary decomposition tree of a two-terminal series-parallel network.
/// Nodes live in a flat arena; `root` indexes into it.
struct SpTree {
  enum class Kind { Leaf, Series, Parallel };
  struct Node {
    Kind kind = Kind::Leaf;
    std::size_t edge = 0;  // leaves only
    std::size_t left = 0, right = 0;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  /// Edge indices of all leaves, left to right.
  std::vector<std::size_t> leaves() const;
  std::string to_string(const Network& network) const;
};

/// Empty when the network is not series-parallel with respect to its
/// (source, sink) pair.
using SpDecomposition = std::optional<SpTree>;

/// Repeated series and parallel reductions until a single source->sink edge
/// remains. Nodes with no incident edges are ignored.
SpDecomposition sp_decompose(const Network& network);

}  // namespace riskroute

namespace riskroute {

/// Edge indices of a Braess network: paths p = (a, b), q = (c, d) and the
/// zigzag r = (a, e, d).
struct BraessLabels {
  std::size_t a, b, c, d, e;
};

/// Labels the five edges when the network is exactly the four-node Braess
/// diamond with its crossing edge, empty otherwise.
std::optional<BraessLabels> braess_labeling(const Network& network);

}  // namespace riskroute
