#pragma once

#include <bit>
#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ghw {

/// Subset of the coordinate index set [m] = {1..m}, m <= 63.
/// Stored as a bit mask; bit i-1 represents coordinate i.
class CoordSet {
public:
  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint64_t mask) : mask_(mask) {}
  /// From 1-based coordinates.
  CoordSet(std::initializer_list<int> coords) {
    for (int c : coords) insert(c);
  }
  static CoordSet from_coords(const std::vector<int>& coords) {
    CoordSet s;
    for (int c : coords) s.insert(c);
    return s;
  }
  /// {1..m}
  static constexpr CoordSet full(int m) {
    return CoordSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int coord) const noexcept { return (mask_ >> (coord - 1)) & 1u; }
  constexpr bool subset_of(CoordSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  void insert(int coord) noexcept { mask_ |= std::uint64_t{1} << (coord - 1); }

  /// 1-based coordinates in increasing order.
  std::vector<int> coords() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) noexcept { return CoordSet(a.mask_ & b.mask_); }
  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) noexcept { return CoordSet(a.mask_ | b.mask_); }
  /// Set difference a \ b.
  friend constexpr CoordSet operator-(CoordSet a, CoordSet b) noexcept { return CoordSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(CoordSet, CoordSet) = default;

  /// Lexicographic order on the sorted coordinate lists.
  friend bool lex_less(CoordSet a, CoordSet b) {
    const auto x = a.coords();
    const auto y = b.coords();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

private:
  std::uint64_t mask_ = 0;
};

}  // namespace ghw
