#pragma once

#include <stdexcept>
#include <string>

#include "riskroute/analysis.hpp"
#include "riskroute/network.hpp"
#include "riskroute/solvers.hpp"

namespace riskroute {

class InstanceParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an instance document. Unknown or missing fields and structural
/// network errors raise InstanceParseError; semantic checks (coefficient
/// signs, reachability, cycles) are left to validate_instance.
Instance read_instance(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Canonical serialisation: fixed field order, two-space indent, shortest
/// round-trip doubles, trailing newline.
std::string write_instance(const Instance& instance);
void write_instance_file(const Instance& instance, const std::string& path);

std::string write_flow(const Instance& instance, const EquilibriumResult& result);
std::string write_report(const PraReport& report);

/// Fixed CSV column order for sweeps.
inline constexpr const char* kSweepCsvHeader = "param,cost_rnwe,cost_rawe,pra,kappa,eta,bound_eta,bound_rho,pass";
std::string sweep_csv_row(double param, const PraReport& report);

/// %.12g, with "inf"/"nan" spelled out.
std::string format_number(double value);

}  // namespace riskroute
