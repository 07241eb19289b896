#include "sylowlab/permutation.hpp"

#include <sstream>

#include "sylowlab/error.hpp"

namespace sylowlab {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorKind::kInvalidPermutation,
                  "image " + std::to_string(v) + " at position " + std::to_string(i) +
                      " breaks bijectivity on degree " + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                     std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) {
      throw Error(ErrorKind::kInvalidPermutation, "a cycle needs at least two points");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto point = cycle[k];
      if (point < 1 || point > degree) {
        throw Error(ErrorKind::kInvalidPermutation,
                    "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) {
        throw Error(ErrorKind::kInvalidPermutation,
                    "point " + std::to_string(point) + " appears twice");
      }
      used[point - 1] = true;
      p.images_[point - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r = identity(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      os << (first ? "" : " ") << i + 1;
      first = false;
      i = images_[i];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  // Degrees are checked by callers that mix generators.
  Permutation r = Permutation::identity(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto v : p.images()) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace sylowlab
