#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "riskroute/instances.hpp"
#include "riskroute/series_parallel.hpp"
#include "riskroute/shortest_path.hpp"
#include "support.hpp"

using namespace riskroute;
using namespace testsupport;

namespace {

// Braess path order from enumeration is lexicographic: (a,b), (a,e,d), (c,d).
Vector braess_path_flow(double p, double q, double r) { return vec({p, r, q}); }

double braess_latency(double v, const std::string& id, double flow) {
  // Hand-written edge latencies of the worst-case Braess family.
  if (id == "a" || id == "d") return 2.0 * v * flow;
  if (id == "e") return 1.0 - v;
  return 1.0;
}

}  // namespace

TEST_CASE("cost polynomial evaluation and calculus") {
  CostPoly p{1.0, 2.0, 3.0};
  CHECK(p(0.0) == 1.0);
  CHECK(p(2.0) == doctest::Approx(1.0 + 4.0 + 12.0));
  CHECK(p.derivative(2.0) == doctest::Approx(2.0 + 12.0));
  CHECK(p.antiderivative(2.0) == doctest::Approx(2.0 + 4.0 + 8.0));
  CHECK(p.degree() == 2);
  CHECK(CostPoly{0.0, 0.0}.is_zero());
  CHECK_FALSE(CostPoly{1.0, -1.0}.nonnegative());
  CHECK(CostPoly{}.degree() == 0);
}

TEST_CASE("nonnegative polynomials are nondecreasing on the half line") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(0.0, 3.0), pt(0.0, 5.0);
  for (int trial = 0; trial < 2000; ++trial) {
    CostPoly p{coef(rng), coef(rng), coef(rng), coef(rng)};
    double a = pt(rng), b = pt(rng);
    if (a > b) std::swap(a, b);
    CHECK(p(a) <= p(b));
    // Antiderivative agrees with a fine trapezoid rule.
    double h = b / 2000.0, trap = 0.0;
    for (int i = 0; i < 2000; ++i) trap += 0.5 * h * (p(i * h) + p((i + 1) * h));
    CHECK(p.antiderivative(b) == doctest::Approx(trap).epsilon(1e-5));
  }
}

TEST_CASE("network construction rejects malformed structure") {
  CHECK_THROWS_AS(Network({"s", "t"}, {edge("e", "s", "x", {1.0})}, "s", "t"), NetworkError);
  CHECK_THROWS_AS(Network({"s", "t"}, {edge("e", "s", "s", {1.0})}, "s", "t"), NetworkError);
  CHECK_THROWS_AS(Network({"s", "t"}, {edge("e", "s", "t", {1.0}), edge("e", "s", "t", {1.0})}, "s", "t"),
                  NetworkError);
  CHECK_THROWS_AS(Network({"s", "s"}, {}, "s", "s"), NetworkError);
  CHECK_THROWS_AS(Network({"s", "t"}, {}, "s", "s"), NetworkError);
  CHECK_NOTHROW(Network({"s", "t"}, {edge("e1", "s", "t", {1.0}), edge("e2", "s", "t", {2.0})}, "s", "t"));
}

TEST_CASE("validate_instance") {
  CHECK(validate_instance(pigou(1.0, 1.0)).ok());

  Instance neg = instance(Network({"s", "t"}, {edge("e1", "s", "t", {1.0, -1.0})}, "s", "t"));
  CHECK(validate_instance(neg).has("negative coefficient"));

  Instance cut = instance(Network({"s", "m", "t"}, {edge("e1", "s", "m", {1.0})}, "s", "t"));
  CHECK(validate_instance(cut).has("sink unreachable"));

  Instance cyc = instance(Network({"s", "u", "w", "t"},
                                  {edge("a", "s", "u", {1.0}), edge("b", "u", "w", {1.0}), edge("c", "w", "u", {1.0}),
                                   edge("d", "w", "t", {1.0})},
                                  "s", "t"));
  CHECK(validate_instance(cyc).has("directed cycle"));

  Instance bad = pigou(1.0, 1.0);
  bad.demand = 0.0;
  bad.gamma = -1.0;
  auto verdict = validate_instance(bad);
  CHECK(verdict.has("demand not positive"));
  CHECK(verdict.has("negative gamma"));
  CHECK_FALSE(verdict.summary().empty());
}

TEST_CASE("simple path enumeration") {
  CHECK(enumerate_simple_paths(pigou(1.0, 1.0).network).size() == 2);
  CHECK(enumerate_simple_paths(Network({"s", "t"}, {edge("e", "s", "t", {1.0})}, "s", "t")).size() == 1);

  const Network net = braess(0.1).network;
  auto paths = enumerate_simple_paths(net);
  REQUIRE(paths.size() == 3);
  CHECK(path_label(net, paths[0]) == "a,b");
  CHECK(path_label(net, paths[1]) == "a,e,d");
  CHECK(path_label(net, paths[2]) == "c,d");
  CHECK(enumerate_simple_paths(net) == paths);
  CHECK_THROWS_AS(enumerate_simple_paths(net, 2), PathOverflow);

  // zigzag(k): each entry u_i reaches exits w_j for j >= i, so k(k+1)/2 paths.
  for (int k = 2; k <= 5; ++k) CHECK(enumerate_simple_paths(zigzag(k).network).size() == std::size_t(k * (k + 1) / 2));
}

TEST_CASE("edge flows from path flows") {
  const Network net = braess(0.1).network;
  auto paths = enumerate_simple_paths(net);
  auto id = [&](const std::string& s) { return static_cast<Eigen::Index>(net.edge_index_or_throw(s)); };

  Vector z = edge_flow(net, paths, braess_path_flow(0.5, 0.5, 0.0));
  for (const char* e : {"a", "b", "c", "d"}) CHECK(z[id(e)] == doctest::Approx(0.5));
  CHECK(z[id("e")] == 0.0);

  Vector x = edge_flow(net, paths, braess_path_flow(0.0, 0.0, 1.0));
  CHECK(x[id("a")] == 1.0);
  CHECK(x[id("b")] == 0.0);
  CHECK(x[id("c")] == 0.0);
  CHECK(x[id("d")] == 1.0);
  CHECK(x[id("e")] == 1.0);

  CHECK(edge_flow(net, paths, Vector::Zero(3)).isZero());
  Matrix inc = incidence_matrix(net, paths);
  CHECK(inc.rows() == 5);
  CHECK(inc.cols() == 3);
  CHECK(inc.colwise().sum()(1) == 3.0);
}

TEST_CASE("path latencies and costs on Braess") {
  const double v = 0.1;
  Instance in = braess(v);
  const Network& net = in.network;
  auto paths = enumerate_simple_paths(net);
  Vector x = edge_flow(net, paths, braess_path_flow(0.0, 0.0, 1.0));
  Vector z = edge_flow(net, paths, braess_path_flow(0.5, 0.5, 0.0));

  auto oracle_latency = [&](const Path& path, const Vector& f) {
    double sum = 0.0;
    for (std::size_t e : path) sum += braess_latency(v, net.edge(e).id, f[static_cast<Eigen::Index>(e)]);
    return sum;
  };
  for (const Path& p : paths) {
    CHECK(path_latency(net, x, p) == doctest::Approx(oracle_latency(p, x)));
    CHECK(path_latency(net, z, p) == doctest::Approx(oracle_latency(p, z)));
  }
  CHECK(path_latency(net, x, paths[1]) == doctest::Approx(1.3));
  CHECK(path_latency(net, z, paths[0]) == doctest::Approx(1.1));
  CHECK(path_latency(net, x, Path{}) == 0.0);

  // Risk-averse costs all equal at the x point: 1.2 + 0.1 on p and q, 1.3 on r.
  for (const Path& p : paths) CHECK(path_cost(in, x, p) == doctest::Approx(1.3));

  Instance neutral = in;
  neutral.gamma = 0.0;
  for (const Path& p : paths) CHECK(path_cost(neutral, x, p) == path_latency(net, x, p));
  neutral.risk_model = RiskModel::MeanStdev;
  for (const Path& p : paths) CHECK(path_cost(neutral, z, p) == path_latency(net, z, p));
}

TEST_CASE("single edge mean-stdev cost") {
  Instance in = instance(Network({"s", "t"}, {edge("e", "s", "t", {4.0}, {3.0})}, "s", "t"), 1.0, RiskModel::MeanStdev);
  Path p{0};
  Vector f = vec({1.0});
  CHECK(path_stdev(in.network, f, p) == 3.0);
  CHECK(path_cost(in, f, p) == doctest::Approx(7.0));
}

TEST_CASE("mean-stdev path risk is the Euclidean norm of edge stdevs") {
  Instance in = instance(Network({"s", "m", "t"}, {edge("e1", "s", "m", {1.0}, {3.0}), edge("e2", "m", "t", {1.0}, {4.0})},
                                 "s", "t"),
                         2.0, RiskModel::MeanStdev);
  Path p{0, 1};
  Vector f = vec({1.0, 1.0});
  CHECK(path_stdev(in.network, f, p) == doctest::Approx(5.0));
  CHECK(path_risk_sum(in.network, f, p) == doctest::Approx(7.0));
  CHECK(path_cost(in, f, p) == doctest::Approx(2.0 + 2.0 * 5.0));
}

TEST_CASE("social cost on Pigou") {
  const Network net = pigou(1.0, 1.0).network;
  CHECK(social_cost(net, vec({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(social_cost(net, vec({1.0, 0.0})) == doctest::Approx(2.0));
  CHECK(social_cost(net, vec({0.0, 0.0})) == 0.0);
}

TEST_CASE("social cost equals path-weighted latency") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    FamilyParams params;
    params.family = seed % 2 ? Family::RandomGeneral : Family::RandomSp;
    params.seed = seed;
    Instance in = generate(params);
    auto paths = enumerate_simple_paths(in.network);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Vector pf(static_cast<Eigen::Index>(paths.size()));
    for (Eigen::Index i = 0; i < pf.size(); ++i) pf[i] = u(rng);
    pf *= in.demand / pf.sum();
    Vector ef = edge_flow(in.network, paths, pf);
    double by_paths = 0.0;
    for (std::size_t p = 0; p < paths.size(); ++p)
      by_paths += pf[static_cast<Eigen::Index>(p)] * path_latency(in.network, ef, paths[p]);
    CHECK(std::abs(social_cost(in.network, ef) - by_paths) <= 1e-10);
  }
}

TEST_CASE("shortest path") {
  Network net = parallel_pair();
  ShortestPath sp = shortest_path(net, vec({2.0, 1.0}));
  CHECK(sp.cost == 1.0);
  CHECK(sp.path == Path{1});
  // Equal costs: deterministic, same answer every call.
  ShortestPath tie1 = shortest_path(net, vec({1.0, 1.0}));
  ShortestPath tie2 = shortest_path(net, vec({1.0, 1.0}));
  CHECK(tie1.path == tie2.path);

  Network cut({"s", "m", "t"}, {edge("e1", "s", "m", {1.0})}, "s", "t");
  CHECK_FALSE(shortest_path(cut, vec({1.0})).found());

  const Network braess_net = braess(0.1).network;
  ShortestPath b = shortest_path(braess_net, vec({1.0, 1.0, 1.0, 1.0, 0.0}));
  CHECK(b.cost == 2.0);
}

TEST_CASE("series-parallel decomposition") {
  auto par = sp_decompose(parallel_pair());
  REQUIRE(par.has_value());
  CHECK(par->to_string(parallel_pair()) == "parallel(e1, e2)");

  auto ser = sp_decompose(series_pair());
  REQUIRE(ser.has_value());
  CHECK(ser->to_string(series_pair()) == "series(e1, e2)");

  CHECK_FALSE(sp_decompose(braess(0.1).network).has_value());
  for (int k = 2; k <= 4; ++k) CHECK_FALSE(sp_decompose(zigzag(k).network).has_value());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FamilyParams params;
    params.family = Family::RandomSp;
    params.seed = seed;
    params.budget = 1 + static_cast<int>(seed % 12);
    Instance in = generate(params);
    auto tree = sp_decompose(in.network);
    REQUIRE(tree.has_value());
    auto leaves = tree->leaves();
    std::sort(leaves.begin(), leaves.end());
    std::vector<std::size_t> all(in.network.num_edges());
    for (std::size_t e = 0; e < all.size(); ++e) all[e] = e;
    CHECK(leaves == all);
  }
}

TEST_CASE("Braess labelling") {
  const Network net = braess(0.1).network;
  auto labels = braess_labeling(net);
  REQUIRE(labels.has_value());
  CHECK(net.edge(labels->a).id == "a");
  CHECK(net.edge(labels->b).id == "b");
  CHECK(net.edge(labels->c).id == "c");
  CHECK(net.edge(labels->d).id == "d");
  CHECK(net.edge(labels->e).id == "e");
  CHECK_FALSE(braess_labeling(parallel_pair()).has_value());
}
