#include "sylowlab/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace sylowlab {

std::int64_t VerificationReport::param(const std::string& name) const {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw std::out_of_range("report has no parameter " + name);
}

VerificationReport not_applicable(std::string theorem_id, std::string group,
                                  std::vector<std::pair<std::string, std::int64_t>> params,
                                  const std::string& reason) {
  VerificationReport r;
  r.theorem_id = std::move(theorem_id);
  r.group = std::move(group);
  r.params = std::move(params);
  r.relation = "not-applicable: " + reason;
  r.passed = true;
  r.applicable = false;
  return r;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["group"] = r.group;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["counted"] = r.counted;
  j["relation"] = r.relation;
  j["passed"] = r.passed;
  j["witnesses"] = r.witnesses;
  return j.dump();
}

std::string to_text_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed ? (r.applicable ? "PASS" : "N/A ") : "FAIL") << ' ' << r.theorem_id << ' '
     << r.group;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << " counted=[";
  for (std::size_t i = 0; i < r.counted.size(); ++i) os << (i ? "," : "") << r.counted[i];
  os << "] " << r.relation;
  return os.str();
}

}  // namespace sylowlab
