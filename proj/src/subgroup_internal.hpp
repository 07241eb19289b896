#pragma once

#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab::detail {

// Greedy generating set of a subgroup in increasing index order.
std::vector<Element> generating_set(const SubgroupSet& a);

// Subgroup generated by gens, grown from base. base must be the subgroup
// generated by some prefix of gens (or the trivial subgroup).
ElementSet close_over(const FiniteGroup& g, const ElementSet& base,
                      const std::vector<Element>& gens);

}  // namespace sylowlab::detail
