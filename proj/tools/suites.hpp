#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace symvar::suites {

struct RunConfig {
  std::string command;
  std::vector<std::string> cases;  // classification ids; empty means all
  std::uint64_t seed = 1;
  int samples = 0;  // 0: per-suite default
  std::string out;
  std::string format = "json";
  std::string db;  // empty: the shipped database
  bool verbose = false;
};

// Every suite returns {"suite", "seed", "samples", "pass", "checks": [...]};
// each check carries name, pass, observed and (when fixed) expected values.
// Reports hold no timings, so equal configs give byte-identical output.
nlohmann::json run_jordan(const RunConfig& cfg);
nlohmann::json run_g2(const RunConfig& cfg);
nlohmann::json run_spinor(const RunConfig& cfg);
// throws DbError on a malformed database and std::invalid_argument on an unknown case id
nlohmann::json run_classification(const RunConfig& cfg);

std::string render(const nlohmann::json& report, const std::string& format);

}  // namespace symvar::suites
