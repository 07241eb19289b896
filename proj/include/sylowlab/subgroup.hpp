#pragma once

#include <cstddef>
#include <vector>

#include "sylowlab/element_set.hpp"
#include "sylowlab/group.hpp"

namespace sylowlab {

// Arbitrary subset of a group's elements (no closure requirement).
class ComplexSet {
 public:
  explicit ComplexSet(FiniteGroup parent) : parent_(std::move(parent)), members_(parent_.order()) {}
  ComplexSet(FiniteGroup parent, const std::vector<Element>& elements);
  ComplexSet(FiniteGroup parent, ElementSet members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  void insert(Element e);

  friend bool operator==(const ComplexSet& a, const ComplexSet& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  FiniteGroup parent_;
  ElementSet members_;
};

// A subgroup of a parent group, stored as a membership bitset.
//
// Instances are only produced by operations that guarantee closure, or by
// from_members, which checks it.
class SubgroupSet {
 public:
  // Throws Error(kNotASubgroup) unless the set holds the identity and is
  // closed under products.
  static SubgroupSet from_members(FiniteGroup parent, ElementSet members);
  static SubgroupSet from_members(FiniteGroup parent, const std::vector<Element>& members);

  static SubgroupSet trivial(FiniteGroup parent);
  static SubgroupSet whole(FiniteGroup parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return size_; }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  bool is_subgroup_of(const SubgroupSet& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }
  std::vector<Element> elements() const { return members_.members(); }

  ComplexSet as_complex() const { return ComplexSet(parent_, members_); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }
  // Deterministic listing order: by order, then lexicographically by members.
  friend bool operator<(const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return lex_less(a.members_, b.members_);
  }

  // Caller guarantees that members form a subgroup.
  static SubgroupSet trusted(FiniteGroup parent, ElementSet members);

 private:
  SubgroupSet(FiniteGroup parent, ElementSet members)
      : parent_(std::move(parent)), members_(std::move(members)), size_(members_.count()) {}

  FiniteGroup parent_;
  ElementSet members_;
  std::size_t size_;
};

struct ConjugacyClassPartition {
  std::vector<std::size_t> class_of;        // class id per element
  std::vector<Element> representatives;     // smallest element of each class
  std::vector<std::size_t> class_sizes;
};

// Group of cosets gN, numbered by their smallest element, plus the maps
// between the parent and the quotient.
struct Quotient {
  FiniteGroup parent;
  FiniteGroup group;
  std::vector<Element> coset_of;        // parent element -> coset index
  std::vector<Element> representative;  // coset index -> smallest member
};

// A subgroup viewed as a group in its own right. Elements are renumbered in
// increasing parent-index order, so the identity stays at 0.
struct Restriction {
  SubgroupSet subgroup;
  FiniteGroup group;
  std::vector<Element> to_parent;
};

SubgroupSet closure_of(const ComplexSet& s);

// Subgroup generated by a subgroup and one more element.
SubgroupSet extend(const SubgroupSet& a, Element x);

bool is_normal(const SubgroupSet& a);
SubgroupSet normalizer(const SubgroupSet& a);
SubgroupSet centralizer(const FiniteGroup& g, Element x);
SubgroupSet center(const FiniteGroup& g);
ConjugacyClassPartition conjugacy_classes(const FiniteGroup& g);

// Both throw Error(kParentMismatch) when the parents differ.
SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b);

// {t^-1 a t : a in A}.
SubgroupSet conjugate_subgroup(const SubgroupSet& a, Element t);

// Throws Error(kNotNormal) unless n is normal in its parent.
Quotient quotient(const FiniteGroup& g, const SubgroupSet& n);

// Preimage in the parent of a subgroup of q.group.
SubgroupSet lift(const Quotient& q, const SubgroupSet& in_quotient);

Restriction restrict_to(const SubgroupSet& a);

// Image in the parent of a subgroup of r.group.
SubgroupSet embed(const Restriction& r, const SubgroupSet& inner);

bool is_cyclic(const FiniteGroup& g);

// Every a in A commutes with every b in B (same parent).
bool commute_elementwise(const SubgroupSet& a, const SubgroupSet& b);

}  // namespace sylowlab
