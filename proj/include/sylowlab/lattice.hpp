#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

inline constexpr std::size_t kDefaultSubgroupCap = 64;

// Every subgroup of a group, computed once, with the per-subgroup data the
// counting checks keep asking for.
class SubgroupLattice {
 public:
  // Throws Error(kEnumerationCapExceeded) when g.order() > cap.
  explicit SubgroupLattice(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap);

  const FiniteGroup& group() const noexcept { return group_; }

  // Sorted by (order, members lexicographically).
  const std::vector<SubgroupSet>& all() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupSet& operator[](std::size_t i) const { return subgroups_[i]; }

  // Indices of the subgroups of order m, in listing order.
  std::vector<std::size_t> indices_of_order(std::size_t m) const;
  std::vector<SubgroupSet> of_order(std::size_t m) const;

  std::optional<std::size_t> index_of(const SubgroupSet& s) const;

  bool normal(std::size_t i) const { return normal_[i]; }
  std::size_t normalizer_order(std::size_t i) const { return normalizer_order_[i]; }

 private:
  FiniteGroup group_;
  std::vector<SubgroupSet> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<bool> normal_;
  std::vector<std::size_t> normalizer_order_;
};

// Every subgroup exactly once, sorted by (order, members). Built by cyclic
// extension: each known subgroup is extended by one more element at a time
// and the results are deduplicated on their membership bitset.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap);

std::vector<SubgroupSet> subgroups_of_order(const FiniteGroup& g, std::size_t m,
                                            std::size_t cap = kDefaultSubgroupCap);

// Orbits of the conjugation action of the common parent on the listed
// subgroups. Each class lists positions into subs, ascending; classes are
// ordered by their first position. Throws kParentMismatch for mixed parents.
std::vector<std::vector<std::size_t>> subgroup_conjugacy_classes(const std::vector<SubgroupSet>& subs);

// All subgroups conjugate to a (distinct ones), sorted.
std::vector<SubgroupSet> conjugates_of(const SubgroupSet& a);

}  // namespace sylowlab
