#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "riskroute/analysis.hpp"
#include "riskroute/instances.hpp"
#include "riskroute/io.hpp"
#include "riskroute/series_parallel.hpp"
#include "support.hpp"

using namespace riskroute;
using namespace testsupport;

TEST_CASE("every family validates") {
  CHECK(validate_instance(pigou(1.0, 1.0)).ok());
  CHECK(validate_instance(braess(0.1)).ok());
  CHECK(validate_instance(braess_general(0.5, 0.1)).ok());
  for (int k = 2; k <= 5; ++k) CHECK(validate_instance(zigzag(k)).ok());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (Family f : {Family::RandomSp, Family::RandomGeneral}) {
      FamilyParams params;
      params.family = f;
      params.seed = seed;
      params.nodes = 3 + static_cast<int>(seed % 6);
      params.edges = params.nodes + static_cast<int>(seed % 7);
      Instance in = generate(params);
      INFO(in.name);
      CHECK(validate_instance(in).ok());
      for (const Edge& e : in.network.edges()) {
        CHECK(e.latency.degree() <= 3);
        CHECK(e.risk.degree() <= 3);
      }
    }
  }
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(braess(0.0), std::invalid_argument);
  CHECK_THROWS_AS(braess(1.5), std::invalid_argument);
  CHECK_NOTHROW(braess(1.0));
  CHECK_THROWS_AS(braess_general(0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(zigzag(1), std::invalid_argument);
}

TEST_CASE("Braess construction matches its equilibrium conditions") {
  for (double v : {0.05, 0.1, 0.5, 1.0}) {
    Instance in = braess(v);
    const Network& net = in.network;
    auto paths = enumerate_simple_paths(net);
    Vector x = edge_flow(net, paths, vec({0.0, 1.0, 0.0}));
    Vector z = edge_flow(net, paths, vec({0.5, 0.0, 0.5}));
    // Risk-averse costs tie at the all-on-r flow; latencies tie at the even split.
    for (const Path& p : paths) {
      CHECK(path_cost(in, x, p) == doctest::Approx(1.0 + 3.0 * v));
      CHECK(path_latency(net, z, p) == doctest::Approx(1.0 + v));
    }
  }
}

TEST_CASE("Braess general family follows the slope formula") {
  for (double alpha : {0.2, 0.4, 0.8}) {
    const double v = 0.1;
    Analysis a = analyze(braess_general(alpha, v));
    // At x all flow takes r: 2 alpha + (1 - alpha + v). At z the outer paths
    // carry v / alpha each, so edge a carries 1 - v / alpha and p costs
    // alpha (1 - v / alpha) + 1.
    double oracle = (alpha + 1.0 + v) / (alpha + 1.0 - v);
    CHECK(a.report.pra == doctest::Approx(oracle).epsilon(1e-6));
  }
}

TEST_CASE("Pigou family") {
  for (double kappa : {0.1, 0.5, 1.0}) {
    Analysis a = analyze(pigou(1.0, kappa));
    CHECK(a.report.cost_rnwe == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(a.report.cost_rawe == doctest::Approx(1.0 + kappa).epsilon(1e-6));
  }
}

TEST_CASE("zigzag values") {
  Instance zz = zigzag(4);
  CHECK(shortest_path_length(zz.network, solve_rnwe(zz).flow.edge_flow) == doctest::Approx(0.25).epsilon(1e-6));
  OracleOptions opts;
  opts.max_paths = 10;
  opts.grid = 20;
  CHECK(max_shortest_path_oracle(zz, opts).best_value == doctest::Approx(1.0));
}

TEST_CASE("random generators") {
  FamilyParams sp;
  sp.family = Family::RandomSp;
  sp.budget = 10;
  sp.seed = 42;
  CHECK(sp_decompose(generate(sp).network).has_value());
  CHECK(write_instance(generate(sp)) == write_instance(generate(sp)));

  FamilyParams gen;
  gen.family = Family::RandomGeneral;
  gen.seed = 9;
  CHECK(write_instance(generate(gen)) == write_instance(generate(gen)));
  FamilyParams other = gen;
  other.seed = 10;
  CHECK(write_instance(generate(gen)) != write_instance(generate(other)));

  // Risk is capped by kappa times latency at every flow in [0, d].
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FamilyParams p;
    p.family = Family::RandomGeneral;
    p.seed = seed;
    p.kappa = 0.7;
    Instance in = generate(p);
    for (const Edge& e : in.network.edges())
      for (double f = 0.0; f <= in.demand; f += 0.05) CHECK(e.risk(f) <= 0.7 * e.latency(f) + 1e-12);
  }

  CHECK(parse_family("zigzag") == Family::Zigzag);
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("instance round trip") {
  Instance b = braess(0.1);
  std::string text = write_instance(b);
  Instance back = read_instance(text);
  CHECK(back == b);
  CHECK(write_instance(back) == text);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FamilyParams p;
    p.family = Family::RandomGeneral;
    p.seed = seed;
    Instance in = generate(p);
    CHECK(read_instance(write_instance(in)) == in);
  }
}

TEST_CASE("instance parsing errors") {
  Instance b = braess(0.1);
  std::string text = write_instance(b);

  std::string no_demand = text;
  auto pos = no_demand.find("  \"demand\"");
  no_demand.erase(pos, no_demand.find('\n', pos) - pos + 1);
  try {
    read_instance(no_demand);
    FAIL("expected a parse error");
  } catch (const InstanceParseError& e) {
    CHECK(std::string(e.what()).find("demand") != std::string::npos);
  }

  std::string extra = text;
  extra.replace(extra.find("\"name\""), 6, "\"color\": 1, \"name\"");
  CHECK_THROWS_WITH_AS(read_instance(extra), doctest::Contains("color"), InstanceParseError);

  CHECK_THROWS_WITH_AS(read_instance("{ \"name\": "), doctest::Contains("line"), InstanceParseError);
  CHECK_THROWS_AS(read_instance("[]"), InstanceParseError);

  std::string stdev = text;
  stdev.replace(stdev.find("\"mean-var\""), 10, "\"mean-stdev\"");
  CHECK(read_instance(stdev).risk_model == RiskModel::MeanStdev);

  std::string bad_model = text;
  bad_model.replace(bad_model.find("\"mean-var\""), 10, "\"median\"");
  CHECK_THROWS_AS(read_instance(bad_model), InstanceParseError);

  std::string dangling = text;
  dangling.replace(dangling.find("\"tail\": \"s\""), 11, "\"tail\": \"q\"");
  CHECK_THROWS_AS(read_instance(dangling), InstanceParseError);

  // Semantic problems parse fine and are left to validation.
  std::string negative = text;
  negative.replace(negative.find("\"gamma\": 1.0"), 12, "\"gamma\": -1.0");
  Instance neg = read_instance(negative);
  CHECK(validate_instance(neg).has("negative gamma"));
}

TEST_CASE("file round trip") {
  const std::string path = "riskroute_test_instance.json";
  write_instance_file(zigzag(3), path);
  CHECK(read_instance_file(path) == zigzag(3));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_instance_file("/nonexistent/dir/x.json"), InstanceParseError);
}

TEST_CASE("report serialisation") {
  Analysis a = analyze(braess(0.1));
  std::string row = sweep_csv_row(0.1, a.report);
  CHECK(row.rfind("0.1,1.1,1.3,", 0) == 0);
  CHECK(row.substr(row.size() - 4) == "PASS");
  std::string json = write_report(a.report);
  CHECK(json.find("\"lemma1\"") != std::string::npos);
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(0.25) == "0.25");
}
