#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sylowlab {

// Outcome of one theorem check on one group.
struct VerificationReport {
  std::string theorem_id;
  std::string group;
  std::vector<std::pair<std::string, std::int64_t>> params;  // insertion order is kept
  std::vector<std::int64_t> counted;
  std::string relation;
  bool passed = false;
  // False when the theorem's hypotheses do not hold for these inputs. Such a
  // report counts as passed and its relation starts with "not-applicable".
  bool applicable = true;
  std::vector<std::string> witnesses;

  std::int64_t param(const std::string& name) const;
};

VerificationReport not_applicable(std::string theorem_id, std::string group,
                                  std::vector<std::pair<std::string, std::int64_t>> params,
                                  const std::string& reason);

// One JSON object, keys in the order theorem_id, group, params, counted,
// relation, passed, witnesses. No trailing newline.
std::string to_json_line(const VerificationReport& r);

// Human-readable single line.
std::string to_text_line(const VerificationReport& r);

}  // namespace sylowlab
