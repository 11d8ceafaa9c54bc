#include "riskroute/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace riskroute {

using Json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kInstanceFields{"name", "nodes",  "edges", "source",    "sink",
                                            "demand", "gamma", "risk_model"};
const std::set<std::string> kEdgeFields{"id", "tail", "head", "latency", "risk"};

void reject_unknown(const Json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = object.begin(); it != object.end(); ++it)
    if (!allowed.count(it.key())) throw InstanceParseError("unknown field '" + it.key() + "' in " + where);
}

const Json& require(const Json& object, const std::string& field, const std::string& where) {
  auto it = object.find(field);
  if (it == object.end()) throw InstanceParseError("missing field '" + field + "' in " + where);
  return *it;
}

template <typename T>
T as(const Json& value, const std::string& field, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InstanceParseError("field '" + field + "' in " + where + " has the wrong type");
  }
}

double as_number(const Json& value, const std::string& field, const std::string& where) {
  if (!value.is_number()) throw InstanceParseError("field '" + field + "' in " + where + " must be a number");
  return value.get<double>();
}

CostPoly as_poly(const Json& value, const std::string& field, const std::string& where) {
  if (!value.is_array()) throw InstanceParseError("field '" + field + "' in " + where + " must be a list of numbers");
  std::vector<double> coeffs;
  for (const Json& c : value) coeffs.push_back(as_number(c, field, where));
  return CostPoly(std::move(coeffs));
}

Json poly_json(const CostPoly& poly) {
  Json arr = Json::array();
  for (double c : poly.coeffs()) arr.push_back(c);
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json number_json(double value) {
  if (std::isfinite(value)) return value;
  return format_number(value);
}

}  // namespace

Instance read_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceParseError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceParseError("instance document must be an object");
  const std::string top = "instance";
  reject_unknown(doc, kInstanceFields, top);

  Instance instance;
  instance.name = as<std::string>(require(doc, "name", top), "name", top);
  const Json& nodes_json = require(doc, "nodes", top);
  if (!nodes_json.is_array()) throw InstanceParseError("field 'nodes' in instance must be a list");
  std::vector<std::string> nodes;
  for (const Json& n : nodes_json) nodes.push_back(as<std::string>(n, "nodes", top));

  const Json& edges_json = require(doc, "edges", top);
  if (!edges_json.is_array()) throw InstanceParseError("field 'edges' in instance must be a list");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const Json& ej = edges_json[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!ej.is_object()) throw InstanceParseError(where + " must be an object");
    reject_unknown(ej, kEdgeFields, where);
    Edge edge;
    edge.id = as<std::string>(require(ej, "id", where), "id", where);
    edge.tail = as<std::string>(require(ej, "tail", where), "tail", where);
    edge.head = as<std::string>(require(ej, "head", where), "head", where);
    edge.latency = as_poly(require(ej, "latency", where), "latency", where);
    edge.risk = as_poly(require(ej, "risk", where), "risk", where);
    edges.push_back(std::move(edge));
  }
  std::string source = as<std::string>(require(doc, "source", top), "source", top);
  std::string sink = as<std::string>(require(doc, "sink", top), "sink", top);
  instance.demand = as_number(require(doc, "demand", top), "demand", top);
  instance.gamma = as_number(require(doc, "gamma", top), "gamma", top);
  std::string model = as<std::string>(require(doc, "risk_model", top), "risk_model", top);
  auto parsed = parse_risk_model(model);
  if (!parsed) throw InstanceParseError("field 'risk_model' must be \"mean-var\" or \"mean-stdev\", got \"" + model + "\"");
  instance.risk_model = *parsed;

  try {
    instance.network = Network(std::move(nodes), std::move(edges), std::move(source), std::move(sink));
  } catch (const NetworkError& e) {
    throw InstanceParseError(std::string("invalid network: ") + e.what());
  }
  return instance;
}

Instance read_instance_file(const std::string& path) { return read_instance(read_file(path)); }

std::string write_instance(const Instance& instance) {
  const Network& net = instance.network;
  Json doc;
  doc["name"] = instance.name;
  doc["nodes"] = net.nodes();
  Json edges = Json::array();
  for (const Edge& edge : net.edges()) {
    Json ej;
    ej["id"] = edge.id;
    ej["tail"] = edge.tail;
    ej["head"] = edge.head;
    ej["latency"] = poly_json(edge.latency);
    ej["risk"] = poly_json(edge.risk);
    edges.push_back(std::move(ej));
  }
  doc["edges"] = std::move(edges);
  doc["source"] = net.source_id();
  doc["sink"] = net.sink_id();
  doc["demand"] = instance.demand;
  doc["gamma"] = instance.gamma;
  doc["risk_model"] = to_string(instance.risk_model);
  return doc.dump(2) + "\n";
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_instance(instance);
}

std::string write_flow(const Instance& instance, const EquilibriumResult& result) {
  const Network& net = instance.network;
  Json doc;
  doc["name"] = instance.name;
  doc["mode"] = to_string(result.flow.mode);
  doc["converged"] = result.converged;
  doc["relative_gap"] = result.relative_gap;
  doc["gap_is_absolute"] = result.gap_is_absolute;
  doc["iterations"] = result.iterations;
  doc["social_cost"] = social_cost(net, result.flow.edge_flow);
  Json paths = Json::array();
  for (std::size_t p = 0; p < result.flow.paths.size(); ++p) {
    Json pj;
    pj["edges"] = path_edge_ids(net, result.flow.paths[p]);
    pj["flow"] = result.flow.path_flow[static_cast<Eigen::Index>(p)];
    paths.push_back(std::move(pj));
  }
  doc["paths"] = std::move(paths);
  Json edges = Json::object();
  for (std::size_t e = 0; e < net.num_edges(); ++e) edges[net.edge(e).id] = result.flow.edge_flow[static_cast<Eigen::Index>(e)];
  doc["edge_flow"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string write_report(const PraReport& report) {
  Json doc;
  doc["name"] = report.instance_name;
  doc["risk_model"] = to_string(report.risk_model);
  doc["gamma"] = report.gamma;
  doc["cost_rnwe"] = report.cost_rnwe;
  doc["cost_rawe"] = report.cost_rawe;
  doc["pra"] = report.pra_defined ? number_json(report.pra) : Json("undefined");
  doc["kappa"] = number_json(report.kappa);
  doc["eta"] = report.eta;
  doc["bound_eta"] = number_json(report.bound_eta);
  doc["bound_worstcase"] = number_json(report.bound_worstcase);
  doc["rho"] = number_json(report.rho);
  doc["bound_rho"] = number_json(report.bound_rho);
  doc["alternating_path"] = report.alternating_label;
  Json checks = Json::array();
  for (const BoundCheck& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["lhs"] = number_json(c.lhs);
    cj["rhs"] = number_json(c.rhs);
    cj["pass"] = c.pass;
    cj["proven"] = c.proven;
    cj["skipped"] = c.skipped;
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string sweep_csv_row(double param, const PraReport& report) {
  std::ostringstream row;
  row << format_number(param) << ',' << format_number(report.cost_rnwe) << ',' << format_number(report.cost_rawe)
      << ',' << format_number(report.pra) << ',' << format_number(report.kappa) << ',' << report.eta << ','
      << format_number(report.bound_eta) << ',' << format_number(report.bound_rho) << ','
      << (report.proven_checks_pass() ? "PASS" : "FAIL");
  return row.str();
}

}  // namespace riskroute
