#pragma once

#include <cstdint>
#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

// Subgroups of orders p, p^2, ..., p^lambda, each inside the next.
struct SylowChain {
  std::int64_t prime = 0;
  int exponent = 0;
  std::vector<SubgroupSet> chain;
};

// Subgroups of orders p, ..., p^(lambda-1) of a p-group, each normal in the
// whole group and contained in the next.
struct ChiefSeries {
  std::int64_t prime = 0;
  std::vector<SubgroupSet> series;
};

// c = a_part * b_part with commuting parts of coprime orders a and b.
// a_part = c^alpha, b_part = c^beta where a*x + b*y = 1, alpha = b*y and
// beta = a*x, both reduced into [0, a*b).
struct CoprimeDecomposition {
  Element a_part = kIdentity;
  Element b_part = kIdentity;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

// Sylow chain by the class-equation recursion: take the smallest element P of
// order p whose centralizer C has index prime to p, recurse in C/<P> and lift
// the cosets back. Throws kNotPrime or kPrimeDoesNotDivideOrder.
SylowChain sylow_chain(const FiniteGroup& g, std::int64_t p);

// Throws kNotAPGroup unless the order is p^lambda with lambda >= 1.
ChiefSeries chief_series(const FiniteGroup& p_group);

// Smallest-index central element of order p lying in the normal subgroup n
// of the p-group. Throws kNotAPGroup, kNotNormal or kTrivialSubgroup.
Element central_element_of_order_p(const FiniteGroup& p_group, const SubgroupSet& n);

// Throws kNotCoprime when gcd(a, b) != 1 and kOrderMismatch when the order of
// c is not a*b.
CoprimeDecomposition coprime_decomposition(const FiniteGroup& g, Element c, std::int64_t a,
                                           std::int64_t b);

// Splits x into its p-part and p'-part.
CoprimeDecomposition p_part_decomposition(const FiniteGroup& g, Element x, std::int64_t p);

}  // namespace sylowlab
