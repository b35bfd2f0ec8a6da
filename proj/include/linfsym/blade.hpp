#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linfsym {

/// A canonical basis element dx_{i1}^...^dx_{ik} (or d_{i1}^...^d_{ik} for
/// multivectors) with strictly increasing indices, stored as a bit set.
class Blade {
 public:
  constexpr Blade() = default;
  static constexpr Blade from_mask(std::uint32_t mask) { return Blade(mask); }
  static constexpr Blade single(int index) { return Blade(std::uint32_t{1} << index); }
  /// Indices are 0-based and must be strictly increasing.
  static Blade from_indices(std::span<const int> indices);
  /// The top blade of an m-dimensional space.
  static constexpr Blade top(int nvars) { return Blade((std::uint32_t{1} << nvars) - 1); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int index) const { return (mask_ >> index) & 1u; }
  constexpr int highest() const { return 31 - std::countl_zero(mask_); }
  /// Number of indices strictly below `index`.
  constexpr int count_below(int index) const {
    return std::popcount(mask_ & ((std::uint32_t{1} << index) - 1));
  }
  std::vector<int> indices() const;

  constexpr Blade with(int index) const { return Blade(mask_ | (std::uint32_t{1} << index)); }
  constexpr Blade without(int index) const { return Blade(mask_ & ~(std::uint32_t{1} << index)); }

  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade a, Blade b) { return a.mask_ <=> b.mask_; }

 private:
  explicit constexpr Blade(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Lexicographic order on the increasing index lists.
bool lex_less(Blade a, Blade b);

/// Sign of reordering a^b into increasing order, 0 when they share an index.
constexpr int wedge_sign(Blade a, Blade b) {
  if ((a.mask() & b.mask()) != 0) return 0;
  int swaps = 0;
  for (std::uint32_t rest = b.mask(); rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a.mask() >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// "dx1^dx3" style text with the given stem ("dx" or "d").
std::string render_blade(Blade b, const char* stem);

/// All blades of the given degree in an m-dimensional space, lexicographic.
std::vector<Blade> blades_of_degree(int nvars, int degree);

}  // namespace linfsym
