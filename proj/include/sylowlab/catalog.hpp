#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylowlab/group.hpp"

namespace sylowlab {

enum class GroupKind { kCyclic, kDihedral, kSym, kAlt, kQ8, kElab, kProd, kPerm, kTable };

// Cycles of one generator, 1-based points. An empty list is the identity.
using CycleList = std::vector<std::vector<std::uint32_t>>;

// Parsed textual group description.
//
//   spec   := kind ':' args | 'q8' | 'prod(' spec ',' spec ')'
//           | 'perm:' cycles (';' cycles)* | 'table:@' filepath
//   cycles := ('(' int (' ' int)+ ')')+ | 'e'
//
// cyclic:n and sym:n / alt:n take one integer, dihedral:m takes the group
// order (even), elab:p^k the prime and exponent.
struct GroupSpec {
  GroupKind kind = GroupKind::kCyclic;
  std::int64_t n = 1;          // order, degree, or the prime of elab
  std::int64_t exponent = 0;   // elab only
  std::vector<GroupSpec> factors;  // prod only
  std::vector<CycleList> generators;  // perm only
  std::string path;            // table only

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws ParseError (byte offset, expected tokens) or Error(kValidationError).
GroupSpec parse_spec(std::string_view text);

// Canonical text; parse_spec(render(spec)) == spec.
std::string render(const GroupSpec& spec);

// Cycle notation such as "(1 2 3)(4 5)"; "" is the identity. Degree is the
// largest point mentioned, raised to min_degree if that is larger.
Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0);

// Deterministic numbering per kind: residues for cyclic, rotations then
// reflections for dihedral, breadth-first closure for sym/alt/perm, the fixed
// table for q8, lexicographic vectors for elab, row-major pairs for prod.
// The result is named render(spec). Throws Error(kClosureExceedsCap) when the
// order would exceed construction_cap.
FiniteGroup build(const GroupSpec& spec, std::size_t construction_cap = kDefaultConstructionCap);
FiniteGroup build(std::string_view spec_text, std::size_t construction_cap = kDefaultConstructionCap);

// Reads a whitespace-separated h x h table of 0-based indices.
FiniteGroup load_table_file(const std::string& path, std::size_t construction_cap = kDefaultConstructionCap);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// The fixed family of test groups, restricted to order <= max_order:
// cyclic:n, dihedral:2n (n >= 3), sym:3..5, alt:4..5, q8, elab:p^k for
// p in {2,3,5} and k >= 2, the nonabelian groups of order 8 and 27, and
// the products C2 x C4, C2 x Q8, S3 x C2.
std::vector<CatalogEntry> standard_catalog(std::size_t max_order,
                                           std::size_t construction_cap = kDefaultConstructionCap);

// Permutation specs for the two nonabelian groups of order 27.
inline constexpr std::string_view kHeisenberg27 = "perm:(1 4 7)(2 5 8)(3 6 9);(4 5 6)(7 9 8)";
inline constexpr std::string_view kMetacyclic27 = "perm:(1 2 3 4 5 6 7 8 9);(2 5 8)(3 9 6)";

}  // namespace sylowlab
