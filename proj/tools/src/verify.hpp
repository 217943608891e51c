#pragma once

// Theorem verification suites behind `berezin verify`.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace berezin::cli {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite);

nlohmann::json to_json(const CheckResult& check);

}  // namespace berezin::cli
