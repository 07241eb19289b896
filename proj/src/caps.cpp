#include "sylowlab/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "sylowlab/error.hpp"

namespace sylowlab {

namespace {

void parse_field(std::string_view field, std::size_t& target) {
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
  if (field.empty()) return;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value == 0) {
    throw Error(ErrorKind::kInvalidArgument, "bad cap value '" + std::string(field) + "'");
  }
  target = value;
}

}  // namespace

Caps parse_caps(std::string_view text) {
  Caps caps;
  std::size_t* targets[] = {&caps.construction, &caps.subgroups, &caps.automorphisms};
  std::size_t field = 0;
  while (true) {
    const auto comma = text.find(',');
    if (field >= 3) {
      throw Error(ErrorKind::kInvalidArgument, "expected at most three comma-separated caps");
    }
    parse_field(text.substr(0, comma), *targets[field++]);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return caps;
}

Caps caps_from_env() {
  const char* raw = std::getenv("SYLOWLAB_CAPS");
  if (raw == nullptr) return Caps{};
  return parse_caps(raw);
}

}  // namespace sylowlab
