#include "matroid/fixtures.hpp"

#include <algorithm>

namespace matroid::fixtures {

namespace {

// Rank of a point set given parallel classes and a list of lines (each a
// mask of class indices): 2 if all classes fit on one line, else min(3,#).
int simple_rank3(Mask classes, const std::vector<Mask>& lines) {
  const int k = popcount(classes);
  if (k <= 1) return k;
  for (Mask line : lines)
    if (subset_of(classes, line)) return 2;
  return std::min(3, k);
}

}  // namespace

Matroid five_point_rank2() {
  GroundSet g({"a", "b", "c", "d", "e"});
  // Parallel classes 0:{a} 1:{b,c} 2:{e}; d is a loop.
  const int cls[5] = {0, 1, 1, -1, 2};
  return Matroid::from_rank_fn(g, [&](Mask x) {
    Mask classes = 0;
    for_each_bit(x, [&](int e) {
      if (cls[e] >= 0) classes |= bit(cls[e]);
    });
    return std::min(2, popcount(classes));
  });
}

FpMatrix five_point_rank2_matrix() {
  GroundSet g({"a", "b", "c", "d", "e"});
  return FpMatrix(5, 2, g,
                  {1, 1, 1, 0, 0,
                   1, 0, 0, 0, 1});
}

Matroid two_lines_extension() {
  GroundSet g({"a", "a'", "b", "b'", "c", "c'"});
  // Classes 0:{a} 1:{a'} 2:{b} 3:{b'} 4:{c,c'}; lines {a,a',c} and {b,b',c}.
  const int cls[6] = {0, 1, 2, 3, 4, 4};
  const std::vector<Mask> lines = {bit(0) | bit(1) | bit(4),
                                   bit(2) | bit(3) | bit(4)};
  return Matroid::from_rank_fn(g, [&](Mask x) {
    Mask classes = 0;
    for_each_bit(x, [&](int e) { classes |= bit(cls[e]); });
    return simple_rank3(classes, lines);
  });
}

Matroid parallel_connection_two_lines() {
  GroundSet g({"x", "p1", "p2", "p3", "q1", "q2", "q3"});
  const std::vector<Mask> lines = {0x0F, 0x71};  // {x,p1,p2,p3}, {x,q1,q2,q3}
  return Matroid::from_rank_fn(g, [&](Mask x) {
    return simple_rank3(x, lines);  // all elements are distinct points
  });
}

Matroid three_lines_at_point() {
  GroundSet g({"x", "p1", "p2", "p3", "q1", "q2", "q3", "a", "b", "c"});
  const Mask line[3] = {0x00E, 0x070, 0x380};  // the three lines minus x
  return Matroid::from_rank_fn(g, [&](Mask v) {
    int met = 0, pts = 0;
    bool two_on_line = false;
    for (const Mask l : line) {
      const int m = popcount(v & l);
      if (m > 0) ++met;
      if (m >= 2) two_on_line = true;
      pts += m;
    }
    // Two points of one line span x; with x spanned, each met line adds 1.
    if (contains(v, 0) || two_on_line) return 1 + met;
    return pts;
  });
}

Matroid whirl3() {
  GroundSet g({"a", "b", "c", "d", "e", "f"});
  const Mask tri[3] = {0x07, 0x1C, 0x31};  // {a,b,c}, {c,d,e}, {e,f,a}
  return Matroid::from_rank_fn(g, [&](Mask x) {
    const int k = popcount(x);
    if (k <= 2) return k;
    for (const Mask t : tri)
      if (subset_of(x, t)) return 2;
    return 3;
  });
}

Matroid whirl_union_left() {
  GroundSet g({"a", "b", "c", "d", "e", "f"});
  // Classes 0:{a,f} 1:{b} 2:{c,d}; e is a loop; rank 2.
  const int cls[6] = {0, 1, 2, 2, -1, 0};
  return Matroid::from_rank_fn(g, [&](Mask x) {
    Mask classes = 0;
    for_each_bit(x, [&](int e) {
      if (cls[e] >= 0) classes |= bit(cls[e]);
    });
    return std::min(2, popcount(classes));
  });
}

FpMatrix whirl_union_left_matrix() {
  GroundSet g({"a", "b", "c", "d", "e", "f"});
  return FpMatrix(2147483647ull, 2, g,
                  {1, 0, 1, 2, 0, 3,
                   0, 1, 1, 2, 0, 0});
}

FpMatrix whirl_union_right_matrix() {
  GroundSet g({"a", "b", "c", "d", "e", "f"});
  return FpMatrix(2147483647ull, 1, g, {0, 0, 0, 1, 1, 1});
}

Matroid three_parallel_pairs() {
  return direct_sum(direct_sum(uniform(1, {"p1", "p2"}), uniform(1, {"q1", "q2"})),
                    uniform(1, {"r1", "r2"}));
}

Matroid truncated_pairs() { return truncation(three_parallel_pairs(), 2); }

Matroid pairs_free_extension() {
  return free_extension(three_parallel_pairs(), "x");
}

FrozenSum nonfundamental_principal_sum() {
  // Second factor: rank 3, a four-point line {p1,p2,p3,z} and a three-point
  // line {q1,q2,z} sharing z.  Anchoring on z makes {p1,p2,p3} a cyclic flat
  // of the sum whose closure in the factor escapes into the anchor, which is
  // what breaks the inclusion-exclusion equalities downstream.
  GroundSet gt({"p1", "p2", "p3", "q1", "q2", "z"});
  const Mask line1 = 0b100111, line2 = 0b111000;
  Matroid n = Matroid::from_rank_fn(gt, [&](Mask x) {
    const int cap = ((x & ~line1) == 0 || (x & ~line2) == 0) ? 2 : 3;
    return std::min(popcount(x), cap);
  });
  return FrozenSum{uniform(1, {"s1", "s2"}), std::move(n), 0b11, 0b100000};
}

}  // namespace matroid::fixtures
