#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "repclust/polygon.hpp"

namespace repclust {

enum class Suite { Stability, ExtConsistency, Tilting, Embedding, Derived, Power, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite s);

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json detail = nlohmann::json::object();  // includes "witness" on failure
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct CheckOptions {
  int half_width = 2;            // derived suite
  std::size_t tilting_vertex_cap = 64;  // brute force only up to this many diagonals
  bool force = false;                   // lift the cap (single-suite runs)
};

/// One report per suite run; All expands into every suite that applies to
/// the parameters (embedding needs p > 2). Throws InvalidParams when a single
/// suite is asked for parameters outside its domain, and BoundExceeded when
/// the tilting brute force would exceed the cap without `force`.
std::vector<SuiteReport> run_suite(Suite suite, const ModelParams& params,
                                   const CheckOptions& options = {});

/// Grid n in 1..6, m in 1..3, p in 1..4, each suite restricted to the points
/// where it applies (see README for the exact ranges).
std::vector<SuiteReport> run_grid(Suite suite, const CheckOptions& options = {});

nlohmann::json to_json(const std::vector<SuiteReport>& reports);
bool all_passed(const std::vector<SuiteReport>& reports);

nlohmann::json to_json(const Diagonal& d);
nlohmann::json to_json(const ModelParams& p);

}  // namespace repclust
