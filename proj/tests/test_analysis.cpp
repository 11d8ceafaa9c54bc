#include <doctest.h>

#include <cmath>
#include <random>

#include "riskroute/analysis.hpp"
#include "riskroute/instances.hpp"
#include "riskroute/series_parallel.hpp"
#include "support.hpp"

using namespace riskroute;
using namespace testsupport;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Vector braess_x(const Network& net) {
  Vector x = Vector::Zero(5);
  for (const char* id : {"a", "d", "e"}) x[static_cast<Eigen::Index>(net.edge_index_or_throw(id))] = 1.0;
  return x;
}

}  // namespace

TEST_CASE("kappa at a flow") {
  Instance b = braess(0.1);
  // Ratios: b and c carry variance 0.1 over latency 1, the rest have no risk.
  CHECK(kappa_at_flow(b, braess_x(b.network)) == doctest::Approx(0.1 / 1.0));

  Instance p = pigou(1.0, 1.0);
  CHECK(kappa_at_flow(p, vec({1.0, 0.0})) == doctest::Approx(1.0));

  Instance quiet = instance(parallel_pair(), 1.0);
  CHECK(kappa_at_flow(quiet, vec({0.5, 0.5})) == 0.0);

  // Positive risk over zero latency is unbounded; zero over zero is ignored.
  Instance inf = instance(Network({"s", "t"}, {edge("e1", "s", "t", {0.0, 1.0}, {1.0}), edge("e2", "s", "t", {0.0, 1.0})},
                                  "s", "t"),
                          1.0);
  CHECK(kappa_at_flow(inf, vec({0.0, 1.0})) == kInf);
  CHECK(kappa_at_flow(inf, vec({1.0, 0.0})) == doctest::Approx(1.0));
}

TEST_CASE("shortest path length") {
  CHECK(shortest_path_length(parallel_pair(), vec({1.0, 0.0})) == doctest::Approx(1.0));
  CHECK(shortest_path_length(pigou(1.0, 1.0).network, vec({0.0, 0.0})) == 0.0);

  Instance zz = zigzag(4);
  EquilibriumResult z = solve_rnwe(zz);
  CHECK(shortest_path_length(zz.network, z.flow.edge_flow) == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("minimum-risk path bound") {
  Instance b = braess(0.1);
  MinRiskPathBound m = min_risk_path_bound(b, braess_x(b.network));
  CHECK(path_label(b.network, m.path) == "a,e,d");
  CHECK(m.risk == 0.0);
  CHECK(m.bound == doctest::Approx(1.3));
  CHECK(m.social_cost == doctest::Approx(1.3));
  CHECK(m.holds);

  Instance p = pigou(1.0, 1.0);
  MinRiskPathBound mp = min_risk_path_bound(p, vec({1.0, 0.0}));
  CHECK(p.network.edge(mp.path[0]).id == "e1");
  CHECK(mp.bound == doctest::Approx(2.0));
  CHECK(mp.holds);

  Instance det = instance(parallel_pair(), 1.0);
  MinRiskPathBound md = min_risk_path_bound(det, vec({0.5, 0.5}));
  CHECK(md.bound == doctest::Approx(0.5));
  CHECK(md.bound <= social_cost(det.network, vec({0.5, 0.5})) + 1e-12);
}

TEST_CASE("Braess stdev inequality examples") {
  BraessSigmaVerdict unit = braess_stdev_inequality(0, 1, 1, 0, 0);
  CHECK(unit.lhs == doctest::Approx(2.0));
  CHECK(unit.rhs == doctest::Approx(2.0));
  CHECK(unit.precondition);
  CHECK(unit.holds());

  BraessSigmaVerdict zero = braess_stdev_inequality(0, 0, 0, 0, 0);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  CHECK(zero.holds());

  BraessSigmaVerdict v = braess_stdev_inequality(3, 4, 0, 0, 0);
  CHECK(v.sigma_p == doctest::Approx(5.0));
  CHECK(v.sigma_q == doctest::Approx(0.0));
  CHECK(v.sigma_r == doctest::Approx(3.0));
  CHECK(v.precondition);
  CHECK(v.lhs == doctest::Approx(2.0));
  CHECK(v.rhs == doctest::Approx(4.0));
}

TEST_CASE("Braess stdev inequality fuzz") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  int tested = 0;
  for (int i = 0; i < 20000; ++i) {
    double s[5];
    for (double& x : s) x = u(rng);
    // Closed forms recomputed here: p = (a, b), q = (c, d), r = (a, e, d).
    double sp = std::hypot(s[0], s[1]), sq = std::hypot(s[2], s[3]);
    double sr = std::sqrt(s[0] * s[0] + s[4] * s[4] + s[3] * s[3]);
    BraessSigmaVerdict verdict = braess_stdev_inequality(s[0], s[1], s[2], s[3], s[4]);
    CHECK(verdict.sigma_r == doctest::Approx(sr));
    CHECK(verdict.precondition == (sr <= std::max(sp, sq)));
    if (!verdict.precondition) continue;
    ++tested;
    CHECK(verdict.holds());
  }
  CHECK(tested > 1000);
}

TEST_CASE("oracle for the maximum shortest path") {
  Instance pair = instance(parallel_pair());
  OracleResult r = max_shortest_path_oracle(pair);
  CHECK(r.best_value == doctest::Approx(1.0));
  CHECK(r.grid == 100);

  Instance zz = zigzag(2);
  OracleResult rz = max_shortest_path_oracle(zz);
  CHECK(rz.best_value == doctest::Approx(1.0));
  CHECK(shortest_path_length(zz.network, solve_rnwe(zz).flow.edge_flow) == doctest::Approx(0.5).epsilon(1e-6));

  Instance one = instance(Network({"s", "t"}, {edge("e", "s", "t", {1.0, 2.0})}, "s", "t"));
  OracleResult r1 = max_shortest_path_oracle(one);
  CHECK(r1.best_value == doctest::Approx(3.0));

  OracleOptions tight;
  tight.max_paths = 2;
  CHECK_THROWS_AS(max_shortest_path_oracle(braess(0.1), tight), PathOverflow);

  OracleOptions small;
  small.point_budget = 1000;
  OracleResult shrunk = max_shortest_path_oracle(braess(0.1), small);
  CHECK(shrunk.grid < 100);
  CHECK(shrunk.points <= 1000);
}

TEST_CASE("Lipschitz bound") {
  // Slopes of the Braess latencies at d = 1: 2v on a and d, 0 elsewhere.
  CHECK(latency_lipschitz_bound(braess(0.1)) == doctest::Approx(0.4));
}

TEST_CASE("within_bound") {
  CHECK(within_bound(1.0, 1.0));
  CHECK(within_bound(1.0 + 5e-7, 1.0));
  CHECK_FALSE(within_bound(1.0 + 2e-6, 1.0));
  CHECK(within_bound(5.0, kInf));
}

TEST_CASE("report on Pigou") {
  Analysis a = analyze(pigou(1.0, 1.0));
  const PraReport& r = a.report;
  CHECK(r.cost_rnwe == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.cost_rawe == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.pra == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.eta == 1);
  CHECK(r.bound_eta == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.proven_checks_pass());
}

TEST_CASE("report on Braess") {
  Analysis a = analyze(braess(0.1));
  const PraReport& r = a.report;
  CHECK(r.pra == doctest::Approx(1.3 / 1.1).epsilon(1e-6));
  CHECK(r.kappa == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(r.eta == 2);
  CHECK(r.bound_eta == doctest::Approx(1.2).epsilon(1e-6));
  CHECK(r.alternating_label == "[c+, e-, b+]");
  CHECK(r.proven_checks_pass());
  REQUIRE(r.find("lemma2") != nullptr);
  CHECK(r.find("lemma2")->lhs <= r.find("lemma2")->rhs * (1 + 1e-6));
  for (const BoundCheck& c : r.checks)
    if (c.pass && !c.skipped) CHECK(c.lhs <= c.rhs * (1.0 + 1e-6) + 1e-12);
}

TEST_CASE("report with zero risk aversion") {
  Instance in = braess(0.1);
  in.gamma = 0.0;
  Analysis a = analyze(in);
  CHECK(a.report.pra == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(a.report.bound_eta == 1.0);
  CHECK(a.report.proven_checks_pass());
}

TEST_CASE("report with infinite kappa skips the bounds") {
  Instance in = instance(Network({"s", "t"}, {edge("e1", "s", "t", {0.0, 1.0}, {1.0}), edge("e2", "s", "t", {0.5})},
                                 "s", "t"),
                         1.0);
  Analysis a = analyze(in);
  // Edge 1 costs at least 1 > 0.5, so the risk-averse flow leaves it empty
  // at zero latency while its variance stays 1.
  REQUIRE_FALSE(a.report.kappa_finite());
  REQUIRE(a.report.find("theorem_eta") != nullptr);
  CHECK(a.report.find("theorem_eta")->skipped);
  CHECK(a.report.proven_checks_pass());
}

TEST_CASE("degenerate zero-cost network leaves the ratio undefined") {
  Instance in = instance(Network({"s", "t"}, {edge("e1", "s", "t", {0.0})}, "s", "t"), 1.0);
  Analysis a = analyze(in);
  CHECK_FALSE(a.report.pra_defined);
}

TEST_CASE("mean-stdev reports") {
  for (double v : {0.05, 0.1, 0.3}) {
    Analysis a = analyze(braess(v, RiskModel::MeanStdev));
    const PraReport& r = a.report;
    CHECK(r.pra <= (1.0 + 2.0 * r.gamma * r.kappa) * (1.0 + 1e-6));
    CHECK(r.proven_checks_pass());
    REQUIRE(r.find("braess_sigma_lemma") != nullptr);
    CHECK(r.find("braess_sigma_lemma")->pass);
  }
  Analysis p = analyze(pigou(1.0, 0.5, RiskModel::MeanStdev));
  CHECK(p.report.pra == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("bound chain holds on random instances") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    FamilyParams params;
    params.family = seed % 2 ? Family::RandomGeneral : Family::RandomSp;
    params.seed = seed;
    params.nodes = 4 + static_cast<int>(seed % 5);
    params.edges = params.nodes + 3;
    Instance in = generate(params);
    Analysis a = analyze(in);
    const PraReport& r = a.report;
    REQUIRE(r.kappa_finite());
    CHECK(r.alternating.has_value());
    CHECK(r.proven_checks_pass());
    // Recompute the headline bounds from the report's own parts.
    CHECK(r.pra <= (1.0 + r.gamma * r.kappa * r.eta) * (1.0 + 1e-6));
    CHECK(r.pra <= (1.0 + r.gamma * r.kappa) * r.rho * (1.0 + 1e-6));
    if (sp_decompose(in.network)) CHECK(r.eta == 1);
  }
}

TEST_CASE("SP instances never beat the risk-neutral shortest path") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FamilyParams params;
    params.family = Family::RandomSp;
    params.seed = seed;
    params.budget = 2 + static_cast<int>(seed % 4);
    Instance in = generate(params);
    if (enumerate_simple_paths(in.network).size() > 6) continue;
    OracleOptions opts;
    opts.grid = 40;
    OracleResult o = max_shortest_path_oracle(in, opts);
    double sz = shortest_path_length(in.network, solve_rnwe(in).flow.edge_flow);
    double slack = in.demand * latency_lipschitz_bound(in) / o.grid;
    CHECK(o.best_value <= sz + slack + 1e-6);
  }
}
