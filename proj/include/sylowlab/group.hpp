#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sylowlab/permutation.hpp"

namespace sylowlab {

// Index of an element inside its group's multiplication table. The identity
// is always 0.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultConstructionCap = 512;

// A finite group stored as its complete multiplication table.
//
// Copies are cheap and share the immutable table, so a FiniteGroup can be
// passed by value and used from several threads. Two handles are the same
// group (same_as) only when they share the same table storage; subgroups use
// this to detect parent mismatches.
class FiniteGroup {
 public:
  // Trivial group.
  FiniteGroup();

  std::size_t order() const noexcept { return data_->order; }

  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }
  std::uint32_t order_of(Element a) const noexcept { return data_->elem_order[a]; }

  // Row i of the table, i.e. i*j for all j.
  std::span<const Element> row(Element i) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(i) * data_->order, data_->order};
  }
  std::span<const Element> table() const noexcept { return data_->table; }
  std::span<const std::uint32_t> element_orders() const noexcept { return data_->elem_order; }

  // A small generating set, chosen greedily in index order.
  std::span<const Element> generators() const noexcept { return data_->generators; }

  const std::string& name() const noexcept { return data_->name; }
  // Display label of an element: cycle notation for permutation groups,
  // otherwise whatever the constructor supplied, falling back to the index.
  std::string label(Element a) const;
  bool has_labels() const noexcept { return !data_->labels.empty(); }

  // Throws Error(kInvalidElement) unless a < order().
  void check(Element a) const;

  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

  // Copy with a different name and, optionally, element labels.
  FiniteGroup renamed(std::string name) const;
  FiniteGroup relabeled(std::vector<std::string> labels) const;

  // Identical tables (element numbering included).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

  // Builds from a table assumed to satisfy the group axioms with identity 0.
  // Used by constructions that guarantee the axioms (closures, quotients,
  // subgroup restrictions); external tables go through group_from_table.
  static FiniteGroup from_trusted_table(std::vector<Element> table, std::size_t order,
                                        std::string name = {},
                                        std::vector<std::string> labels = {});

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table{0};
    std::vector<Element> inverse{0};
    std::vector<std::uint32_t> elem_order{1};
    std::vector<Element> generators;
    std::string name;
    std::vector<std::string> labels;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<Data> finish(std::shared_ptr<Data> data);

  std::shared_ptr<const Data> data_;
};

// Closure of the generators under composition. Elements are numbered in
// breadth-first discovery order from the identity, applying the generators in
// the order given. All generators must share one degree; with no generators
// the result is the trivial group. Throws kInvalidPermutation on mixed
// degrees and kClosureExceedsCap once more than cap elements appear.
FiniteGroup group_from_generators(const std::vector<Permutation>& generators,
                                  std::size_t cap = kDefaultConstructionCap);

// Checks the group axioms and throws NotAGroupError with a witness on the
// first violation. Associativity is checked exhaustively only when
// h <= associativity_cap.
FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table,
                             std::size_t associativity_cap = kDefaultConstructionCap);

std::uint32_t element_order(const FiniteGroup& g, Element x);

// x^k for any integer k, reduced modulo the order of x.
Element power(const FiniteGroup& g, Element x, std::int64_t k);

// t^-1 x t.
Element conjugate(const FiniteGroup& g, Element x, Element t);

bool is_abelian(const FiniteGroup& g);

// Least common multiple of the element orders.
std::uint64_t exponent(const FiniteGroup& g);

}  // namespace sylowlab
