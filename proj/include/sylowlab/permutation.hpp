#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sylowlab {

// A bijection on {0, ..., degree-1}. Products compose left to right:
// (a * b)(i) = b(a(i)), so conjugation t^-1 x t matches the usual
// textbook convention for permutation groups.
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(kInvalidPermutation) unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  // Cycles use 1-based points. Throws kInvalidPermutation for points outside
  // 1..degree, repeated points, or cycles shorter than two points.
  static Permutation from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // Disjoint-cycle form with 1-based points, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sylowlab
