#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hlag::verify {

/// One numbered check of the bundled verification suite.
struct Criterion {
  int id = 0;
  std::string group;  // facts, motzkin-straus, compression, density, spot-check, turan, lemmas
  std::string title;
};

const std::vector<Criterion>& criteria();

struct SuiteOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CriterionResult {
  Criterion criterion;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  nlohmann::json data;  // measured values
};

/// Criterion ids for a list of ids ("8") or group names ("facts"); empty selects all.
/// Throws ValidationError on an unknown selector.
std::vector<int> select(const std::vector<std::string>& only);

/// Runs one criterion. Exceptions raised inside a check are reported as failures.
CriterionResult run_criterion(int id, const SuiteOptions& options);

struct SuiteReport {
  std::vector<CriterionResult> results;
  std::uint64_t seed = 0;
  bool passed() const;
};

SuiteReport run_suite(const std::vector<int>& ids, const SuiteOptions& options,
                      const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [id] title: detail (seconds)".
std::string format_line(const CriterionResult& result);

nlohmann::json to_json(const CriterionResult& result);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace hlag::verify
