#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace finref {

// Subsets of point sets {0..n-1}, n <= 64, as bit masks.
using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int i) { return (m >> i) & 1; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Lexicographic order on the sorted index sequences, sets of smaller size
// first.  Used wherever a family of subsets is emitted canonically.
inline bool canonical_set_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace finref
