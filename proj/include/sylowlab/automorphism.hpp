#pragma once

#include <cstddef>
#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

inline constexpr std::size_t kDefaultAutomorphismCap = 24;

// An automorphism as the image of every element index.
using Automorphism = std::vector<Element>;

// All automorphisms, sorted lexicographically (the identity map first).
// Backtracks over images of the group's generating set, pruning on element
// order and on independence from the images chosen so far.
// Throws Error(kEnumerationCapExceeded) when g.order() > cap.
std::vector<Automorphism> automorphisms(const FiniteGroup& g,
                                        std::size_t cap = kDefaultAutomorphismCap);

// phi(A) = A for every automorphism phi of the parent.
bool is_characteristic(const SubgroupSet& a, std::size_t cap = kDefaultAutomorphismCap);

// Same test against a precomputed automorphism list.
bool is_characteristic(const SubgroupSet& a, const std::vector<Automorphism>& autos);

}  // namespace sylowlab
