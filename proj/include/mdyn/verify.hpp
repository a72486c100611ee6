#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdyn/budget.hpp"

namespace mdyn {

struct Range {
  long lo = 0;
  long hi = 0;  // inclusive
};

// Parses "a..b" or a single integer.
Range parse_range(const std::string& text);

struct VerifyOptions {
  Budget budget;
  int max_iter = 24;
  // thm1 / prop4 / rootloc grid
  Range d{3, 6};
  Range l{-4, 4};
  Range c{2, 5};
  // families grid
  Range family_d{3, 8};
  Range family_l{-5, 5};
  // thm2 census
  int census_degree = 4;
  long census_height = 4;
  int jobs = 4;
  // deg12
  int k = 3;
  Range S{1, 3};
  long deg12_precision_ceiling = 1L << 24;
  // properties
  long samples = 500;
  int max_degree = 6;
  long height = 10;
  std::uint64_t seed = 20240611;
  int property_iter = 4;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;

  // Records one check; a false outcome keeps the payload.
  void check(bool ok, const nlohmann::json& payload);
};

// lehmer, families, thm1, rootloc, prop4, thm2 (alias census), zhang,
// deg6, thm4, deg12, properties
const std::vector<std::string>& suite_names();
// Throws ParameterOutOfRange for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace mdyn
