#include "sylowlab/element_set.hpp"

namespace sylowlab {

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
  // At the lowest differing index, the set holding that index has the
  // smaller member list.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace sylowlab
