#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sylowlab/group.hpp"

namespace sylowlab {

// Fixed-universe bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1) {
        f(static_cast<Element>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const noexcept;

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Lexicographic order of the sorted member lists. For sets of equal size
  // this is the order used for every deterministic listing.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace sylowlab
