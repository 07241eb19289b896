#pragma once

#include <string>
#include <vector>

#include "sylowlab/catalog.hpp"
#include "sylowlab/subgroup.hpp"

namespace testing {

// Element with the given display label, e.g. "(1 2 3)".
inline sylowlab::Element by_label(const sylowlab::FiniteGroup& g, const std::string& label) {
  for (sylowlab::Element a = 0; a < g.order(); ++a) {
    if (g.label(a) == label) return a;
  }
  throw std::runtime_error("no element labelled " + label);
}

inline sylowlab::SubgroupSet span(const sylowlab::FiniteGroup& g, const std::vector<sylowlab::Element>& gens) {
  return sylowlab::closure_of(sylowlab::ComplexSet(g, gens));
}

inline std::vector<sylowlab::Element> members(const sylowlab::SubgroupSet& s) { return s.elements(); }

}  // namespace testing
