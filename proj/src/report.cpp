#include "hitchin2/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hitchin2 {

size_t VerificationReport::passed() const {
  return std::count_if(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "pass"; });
}

size_t VerificationReport::failed() const {
  return std::count_if(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "fail"; });
}

size_t VerificationReport::skipped() const {
  return std::count_if(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "skipped"; });
}

std::string VerificationReport::to_json(bool include_timings) const {
  std::vector<CheckRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = version;
  j["suite"] = suite;
  j["seed"] = seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : sorted) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["status"] = r.status;
    if (!r.detail.empty()) c["detail"] = r.detail;
    if (include_timings) c["elapsed_ms"] = r.elapsed_ms;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", sorted.size()},
                  {"passed", passed()},
                  {"failed", failed()},
                  {"skipped", skipped()}};
  return j.dump(2);
}

}  // namespace hitchin2
