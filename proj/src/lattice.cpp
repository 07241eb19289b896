#include "sylowlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "sylowlab/error.hpp"
#include "subgroup_internal.hpp"

namespace sylowlab {

namespace {

// Smallest element generating the same cyclic subgroup as each element.
// Extending by x or by any other generator of <x> gives the same subgroup.
std::vector<bool> cyclic_representatives(const FiniteGroup& g) {
  std::vector<bool> canonical(g.order(), true);
  for (Element x = 0; x < g.order(); ++x) {
    if (!canonical[x]) continue;
    const std::uint32_t n = g.order_of(x);
    Element y = x;
    for (std::uint32_t k = 2; k < n; ++k) {
      y = g.mul(y, x);
      if (std::gcd(k, n) == 1 && y > x) canonical[y] = false;
    }
  }
  return canonical;
}

struct Node {
  ElementSet members;
  std::vector<Element> gens;
};

}  // namespace

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorKind::kEnumerationCapExceeded,
                "group order " + std::to_string(g.order()) + " exceeds subgroup cap " +
                    std::to_string(cap));
  }
  const auto canonical = cyclic_representatives(g);
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet trivial(g.order());
  trivial.insert(kIdentity);
  seen.insert(trivial);
  nodes.push_back({trivial, {}});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Element x = 1; x < g.order(); ++x) {
      if (!canonical[x] || nodes[i].members.contains(x)) continue;
      auto gens = nodes[i].gens;
      gens.push_back(x);
      ElementSet next = detail::close_over(g, nodes[i].members, gens);
      if (seen.insert(next).second) nodes.push_back({std::move(next), std::move(gens)});
    }
  }
  std::vector<SubgroupSet> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.push_back(SubgroupSet::trusted(g, std::move(n.members)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupSet> subgroups_of_order(const FiniteGroup& g, std::size_t m, std::size_t cap) {
  auto all = all_subgroups(g, cap);
  std::vector<SubgroupSet> out;
  for (auto& s : all) {
    if (s.order() == m) out.push_back(std::move(s));
  }
  return out;
}

SubgroupLattice::SubgroupLattice(const FiniteGroup& g, std::size_t cap)
    : group_(g), subgroups_(all_subgroups(g, cap)) {
  normal_.reserve(subgroups_.size());
  normalizer_order_.reserve(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    index_.emplace(subgroups_[i].members(), i);
    normal_.push_back(is_normal(subgroups_[i]));
    normalizer_order_.push_back(normal_.back() ? g.order() : normalizer(subgroups_[i]).order());
  }
}

std::vector<std::size_t> SubgroupLattice::indices_of_order(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i].order() == m) out.push_back(i);
  }
  return out;
}

std::vector<SubgroupSet> SubgroupLattice::of_order(std::size_t m) const {
  std::vector<SubgroupSet> out;
  for (const auto& s : subgroups_) {
    if (s.order() == m) out.push_back(s);
  }
  return out;
}

std::optional<std::size_t> SubgroupLattice::index_of(const SubgroupSet& s) const {
  if (!s.parent().same_as(group_)) return std::nullopt;
  const auto it = index_.find(s.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SubgroupSet> conjugates_of(const SubgroupSet& a) {
  const FiniteGroup& g = a.parent();
  std::unordered_set<ElementSet, ElementSetHash> seen{a.members()};
  std::vector<SubgroupSet> out{a};
  // Orbit under the generators of the parent.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element t : g.generators()) {
      SubgroupSet c = conjugate_subgroup(out[i], t);
      if (seen.insert(c.members()).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> subgroup_conjugacy_classes(const std::vector<SubgroupSet>& subs) {
  std::vector<std::vector<std::size_t>> classes;
  if (subs.empty()) return classes;
  const FiniteGroup& g = subs.front().parent();
  std::unordered_map<ElementSet, std::vector<std::size_t>, ElementSetHash> positions;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].parent().same_as(g)) {
      throw Error(ErrorKind::kParentMismatch, "subgroups of different groups");
    }
    positions[subs[i].members()].push_back(i);
  }
  std::vector<bool> assigned(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls;
    for (const auto& c : conjugates_of(subs[i])) {
      const auto it = positions.find(c.members());
      if (it == positions.end()) continue;
      for (auto j : it->second) {
        if (!assigned[j]) {
          assigned[j] = true;
          cls.push_back(j);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace sylowlab
