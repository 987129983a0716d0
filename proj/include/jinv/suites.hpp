#pragma once

// Verification suites behind `jinv verify`: each check compares an exact
// computation against its expected value and records a machine-readable
// result. Reports with the same config and seed are byte-identical except
// for the millis fields.

#include <cstdint>
#include <string>
#include <vector>

#include "jinv/io.hpp"

namespace jinv {

inline constexpr const char* kToolVersion = "0.1.0";

struct Config {
  std::uint64_t seed = 12345;
  long height = 10;
  int monomial_cap = 20000;
  double tolerance = 1e-9;
  std::vector<std::string> suites;  // empty = all registered suites
  std::vector<AlgebraId> algebras = {AlgebraId::R, AlgebraId::C, AlgebraId::H,
                                     AlgebraId::O};

  json echo() const;
};

// One key=value per line; '#' starts a comment. Flags win over file values.
void config_apply(Config& cfg, const std::string& key, const std::string& value);
Config config_from_file(const std::string& path);

struct Check {
  std::string name;
  std::string algebra;  // "V0".."V3" or "-"
  std::string status;   // "pass" | "fail" | "skip"
  json expected, actual, witness;
  long long millis = 0;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Config& cfg);  // UnknownSuite

json report_json(const std::vector<SuiteResult>& suites, const Config& cfg);
bool report_all_pass(const std::vector<SuiteResult>& suites);

}  // namespace jinv
