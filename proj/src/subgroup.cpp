#include "sylowlab/subgroup.hpp"

#include <string>

#include "sylowlab/error.hpp"
#include "subgroup_internal.hpp"

namespace sylowlab {

namespace detail {

ElementSet close_over(const FiniteGroup& g, const ElementSet& base,
                      const std::vector<Element>& gens) {
  ElementSet set = base;
  std::vector<Element> list = base.members();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element x : gens) {
      const Element p = g.mul(list[i], x);
      if (!set.contains(p)) {
        set.insert(p);
        list.push_back(p);
      }
    }
  }
  return set;
}

std::vector<Element> generating_set(const SubgroupSet& a) {
  const FiniteGroup& g = a.parent();
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(kIdentity);
  a.members().for_each([&](Element x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    span = close_over(g, span, gens);
  });
  return gens;
}

}  // namespace detail

namespace {

void require_same_parent(const FiniteGroup& a, const FiniteGroup& b) {
  if (!a.same_as(b)) throw Error(ErrorKind::kParentMismatch, "subgroups of different groups");
}

}  // namespace

ComplexSet::ComplexSet(FiniteGroup parent, const std::vector<Element>& elements)
    : parent_(std::move(parent)), members_(parent_.order()) {
  for (Element e : elements) insert(e);
}

ComplexSet::ComplexSet(FiniteGroup parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.universe() != parent_.order()) {
    throw Error(ErrorKind::kInvalidArgument, "member set does not match parent order");
  }
}

void ComplexSet::insert(Element e) {
  parent_.check(e);
  members_.insert(e);
}

SubgroupSet SubgroupSet::trusted(FiniteGroup parent, ElementSet members) {
  return SubgroupSet(std::move(parent), std::move(members));
}

SubgroupSet SubgroupSet::from_members(FiniteGroup parent, ElementSet members) {
  if (members.universe() != parent.order()) {
    throw Error(ErrorKind::kInvalidArgument, "member set does not match parent order");
  }
  if (!members.contains(kIdentity)) {
    throw Error(ErrorKind::kNotASubgroup, "identity missing");
  }
  bool closed = true;
  members.for_each([&](Element a) {
    if (!closed) return;
    members.for_each([&](Element b) {
      if (closed && !members.contains(parent.mul(a, b))) closed = false;
    });
  });
  if (!closed) throw Error(ErrorKind::kNotASubgroup, "set is not closed under products");
  return SubgroupSet(std::move(parent), std::move(members));
}

SubgroupSet SubgroupSet::from_members(FiniteGroup parent, const std::vector<Element>& members) {
  ElementSet set(parent.order());
  for (Element e : members) {
    parent.check(e);
    set.insert(e);
  }
  return from_members(std::move(parent), std::move(set));
}

SubgroupSet SubgroupSet::trivial(FiniteGroup parent) {
  ElementSet set(parent.order());
  set.insert(kIdentity);
  return SubgroupSet(std::move(parent), std::move(set));
}

SubgroupSet SubgroupSet::whole(FiniteGroup parent) {
  ElementSet set(parent.order());
  for (Element e = 0; e < parent.order(); ++e) set.insert(e);
  return SubgroupSet(std::move(parent), std::move(set));
}

SubgroupSet closure_of(const ComplexSet& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(kIdentity);
  s.members().for_each([&](Element x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    span = detail::close_over(g, span, gens);
  });
  return SubgroupSet::trusted(g, std::move(span));
}

SubgroupSet extend(const SubgroupSet& a, Element x) {
  a.parent().check(x);
  if (a.contains(x)) return a;
  auto gens = detail::generating_set(a);
  gens.push_back(x);
  return SubgroupSet::trusted(a.parent(), detail::close_over(a.parent(), a.members(), gens));
}

bool is_normal(const SubgroupSet& a) {
  const FiniteGroup& g = a.parent();
  const auto gens = detail::generating_set(a);
  for (Element t : g.generators()) {
    const Element ti = g.inverse(t);
    for (Element x : gens) {
      if (!a.contains(g.mul(g.mul(ti, x), t))) return false;
    }
  }
  return true;
}

SubgroupSet normalizer(const SubgroupSet& a) {
  const FiniteGroup& g = a.parent();
  const auto gens = detail::generating_set(a);
  ElementSet result(g.order());
  for (Element t = 0; t < g.order(); ++t) {
    const Element ti = g.inverse(t);
    bool keeps = true;
    for (Element x : gens) {
      if (!a.contains(g.mul(g.mul(ti, x), t))) {
        keeps = false;
        break;
      }
    }
    if (keeps) result.insert(t);
  }
  return SubgroupSet::trusted(g, std::move(result));
}

SubgroupSet centralizer(const FiniteGroup& g, Element x) {
  g.check(x);
  ElementSet result(g.order());
  for (Element t = 0; t < g.order(); ++t) {
    if (g.mul(t, x) == g.mul(x, t)) result.insert(t);
  }
  return SubgroupSet::trusted(g, std::move(result));
}

SubgroupSet center(const FiniteGroup& g) {
  ElementSet result(g.order());
  const auto gens = g.generators();
  for (Element t = 0; t < g.order(); ++t) {
    bool central = true;
    for (Element s : gens) {
      if (g.mul(t, s) != g.mul(s, t)) {
        central = false;
        break;
      }
    }
    if (central) result.insert(t);
  }
  return SubgroupSet::trusted(g, std::move(result));
}

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& g) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  ConjugacyClassPartition out;
  out.class_of.assign(g.order(), kUnassigned);
  const auto gens = g.generators();
  for (Element x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != kUnassigned) continue;
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(x);
    std::vector<Element> orbit{x};
    out.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element t : gens) {
        const Element y = g.mul(g.mul(g.inverse(t), orbit[i]), t);
        if (out.class_of[y] == kUnassigned) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    out.class_sizes.push_back(orbit.size());
  }
  return out;
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  require_same_parent(a.parent(), b.parent());
  return SubgroupSet::trusted(a.parent(), a.members() & b.members());
}

SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b) {
  require_same_parent(a.parent(), b.parent());
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  auto gens = detail::generating_set(a);
  for (Element x : detail::generating_set(b)) gens.push_back(x);
  return SubgroupSet::trusted(a.parent(), detail::close_over(a.parent(), a.members(), gens));
}

SubgroupSet conjugate_subgroup(const SubgroupSet& a, Element t) {
  const FiniteGroup& g = a.parent();
  g.check(t);
  const Element ti = g.inverse(t);
  ElementSet result(g.order());
  a.members().for_each([&](Element x) { result.insert(g.mul(g.mul(ti, x), t)); });
  return SubgroupSet::trusted(g, std::move(result));
}

Quotient quotient(const FiniteGroup& g, const SubgroupSet& n) {
  require_same_parent(g, n.parent());
  if (!is_normal(n)) throw Error(ErrorKind::kNotNormal, "quotient by a non-normal subgroup");
  constexpr auto kUnassigned = static_cast<Element>(-1);
  Quotient q{g, FiniteGroup{}, std::vector<Element>(g.order(), kUnassigned), {}};
  const auto members = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Element>(q.representative.size());
    q.representative.push_back(x);
    for (Element m : members) q.coset_of[g.mul(x, m)] = id;
  }
  const std::size_t k = q.representative.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("[" + g.label(q.representative[i]) + "]");
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = q.coset_of[g.mul(q.representative[i], q.representative[j])];
    }
  }
  q.group = FiniteGroup::from_trusted_table(std::move(table), k, g.name() + "/N", std::move(labels));
  return q;
}

SubgroupSet lift(const Quotient& q, const SubgroupSet& in_quotient) {
  require_same_parent(q.group, in_quotient.parent());
  ElementSet result(q.parent.order());
  for (Element x = 0; x < q.parent.order(); ++x) {
    if (in_quotient.contains(q.coset_of[x])) result.insert(x);
  }
  return SubgroupSet::trusted(q.parent, std::move(result));
}

Restriction restrict_to(const SubgroupSet& a) {
  const FiniteGroup& g = a.parent();
  Restriction r{a, FiniteGroup{}, a.elements()};
  const std::size_t k = r.to_parent.size();
  std::vector<Element> from_parent(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) from_parent[r.to_parent[i]] = static_cast<Element>(i);
  std::vector<Element> table(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(r.to_parent[i]));
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = from_parent[g.mul(r.to_parent[i], r.to_parent[j])];
    }
  }
  r.group = FiniteGroup::from_trusted_table(std::move(table), k, g.name() + "|sub", std::move(labels));
  return r;
}

SubgroupSet embed(const Restriction& r, const SubgroupSet& inner) {
  require_same_parent(r.group, inner.parent());
  ElementSet result(r.subgroup.parent().order());
  inner.members().for_each([&](Element x) { result.insert(r.to_parent[x]); });
  return SubgroupSet::trusted(r.subgroup.parent(), std::move(result));
}

bool is_cyclic(const FiniteGroup& g) {
  for (auto o : g.element_orders()) {
    if (o == g.order()) return true;
  }
  return false;
}

bool commute_elementwise(const SubgroupSet& a, const SubgroupSet& b) {
  require_same_parent(a.parent(), b.parent());
  const FiniteGroup& g = a.parent();
  const auto ga = detail::generating_set(a);
  const auto gb = detail::generating_set(b);
  for (Element x : ga) {
    for (Element y : gb) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace sylowlab
