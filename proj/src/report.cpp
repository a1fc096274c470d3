#include "slicealg/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace slicealg {

void Report::record(bool ok, const std::string& section,
                    const std::string& case_id, const std::string& expected,
                    const std::string& got) {
  ++checks;
  ++sections[section];
  if (!ok) failures.push_back({case_id, expected, got});
}

void Report::merge(const Report& other) {
  checks += other.checks;
  for (const auto& [s, n] : other.sections) sections[s] += n;
  failures.insert(failures.end(), other.failures.begin(),
                  other.failures.end());
}

nlohmann::json Report::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures)
    fails.push_back({{"case", f.case_id}, {"expected", f.expected},
                     {"got", f.got}});
  return nlohmann::json{{"suite", suite},
                        {"passed", passed()},
                        {"checks", checks},
                        {"sections", sections},
                        {"failures", std::move(fails)}};
}

std::string Report::text() const {
  std::ostringstream os;
  os << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks
     << " checks";
  if (!sections.empty()) {
    os << "; ";
    bool first = true;
    for (const auto& [s, n] : sections) {
      if (!first) os << ", ";
      first = false;
      os << s << "=" << n;
    }
  }
  os << ")\n";
  for (const auto& f : failures)
    os << "  FAIL " << f.case_id << ": expected " << f.expected << ", got "
       << f.got << "\n";
  return os.str();
}

}  // namespace slicealg
