#pragma once

#include <bit>
#include <cstdint>

namespace matroid {

// A subset of a ground set, one bit per element (bit i = element i in
// ground order).  With the default size cap of 16, masks fit comfortably
// in 32 bits and a full rank table has at most 65536 entries.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_bits(int n) { return n > 0 ? (Mask{1} << n) - 1 : 0; }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }

// Visits every submask of m, including m itself and 0, in decreasing order.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask w = m;
  while (true) {
    f(w);
    if (w == 0) break;
    w = (w - 1) & m;
  }
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace matroid
