#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace sylowlab {

// Size limits for the exhaustive algorithms.
struct Caps {
  std::size_t construction = 512;   // max group order built, and associativity check bound
  std::size_t subgroups = 64;       // max order for full subgroup lattice enumeration
  std::size_t automorphisms = 24;   // max order for automorphism enumeration
};

// Parses "construction,subgroups,automorphisms" (the SYLOWLAB_CAPS format).
// Empty fields keep the default. Throws Error(kInvalidArgument) on malformed text.
Caps parse_caps(std::string_view text);

// Caps from the SYLOWLAB_CAPS environment variable, defaults when unset.
Caps caps_from_env();

}  // namespace sylowlab
