#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace slicealg {

struct CheckFailure {
  std::string case_id;
  std::string expected;
  std::string got;
};

/// Aggregated result of a verification sweep.  `sections` holds per-group
/// pass counts (e.g. one entry per osp relation).
struct Report {
  std::string suite;
  long checks = 0;
  std::map<std::string, long> sections;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }

  void record(bool ok, const std::string& section, const std::string& case_id,
              const std::string& expected, const std::string& got);
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string text() const;
};

}  // namespace slicealg
