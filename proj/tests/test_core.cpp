#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/fixtures.hpp"
#include "matroid/matroid.hpp"

using namespace matroid;

namespace {

std::set<Mask> as_set(const std::vector<Mask>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("ground sets validate labels") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), LabelCollision);
  GroundSet g({"a", "b", "c"});
  CHECK(g.size() == 3);
  CHECK(g.index_of("c") == 2);
  CHECK_THROWS_AS(g.index_of("z"), UnknownLabel);
  CHECK(g.mask_of({"a", "c"}) == 0b101);
  CHECK(g.labels_of(0b110) == std::vector<std::string>{"b", "c"});
  CHECK_THROWS_AS(concat(g, GroundSet({"c", "d"})), LabelCollision);
}

TEST_CASE("oversized grounds are rejected") {
  std::vector<std::string> big;
  for (int i = 0; i < 17; ++i) big.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(GroundSet{big}, GroundTooLarge);
}

TEST_CASE("rank table validation catches each axiom") {
  GroundSet g({"a", "b"});
  using T = std::vector<int>;
  CHECK_THROWS_AS(Matroid::from_table(g, T{1, 1, 1, 2}), AxiomViolation);  // r({}) != 0
  CHECK_THROWS_AS(Matroid::from_table(g, T{0, 2, 1, 2}), AxiomViolation);  // unit step
  CHECK_THROWS_AS(Matroid::from_table(g, T{0, 1, 1, 0}), AxiomViolation);  // monotone
  GroundSet g3({"a", "b", "c"});
  // r(ab) + r(ac) < r(abc) + r(a): submodularity fails.
  CHECK_THROWS_AS(
      Matroid::from_table(g3, T{0, 1, 1, 1, 1, 1, 1, 2}), AxiomViolation);
  CHECK_THROWS_AS(Matroid::from_table(g, T{0, 1, 1}), InvalidTable);
  CHECK_NOTHROW(Matroid::from_table(g, T{0, 1, 1, 1}));
}

TEST_CASE("axiom witnesses name the offending sets") {
  GroundSet g({"a", "b"});
  try {
    Matroid::from_table(g, std::vector<int>{0, 1, 1, 0});
    FAIL("expected a violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::Monotonicity);
    CHECK(std::string(e.what()).find("monotonic") != std::string::npos);
  }
}

TEST_CASE("basic queries on a line plus junk") {
  // Rank 2 on {a,b,c,d,e}: d loop, b and c parallel, a,b,e three points.
  Matroid m = fixtures::five_point_rank2();
  const Mask a = 0b00001, b = 0b00010, c = 0b00100, d = 0b01000, e = 0b10000;
  CHECK(m.rank() == 2);
  CHECK(m.rank(b | c) == 1);
  CHECK(loops(m) == d);
  CHECK(coloops(m) == 0);
  CHECK(closure(m, 0) == d);
  CHECK(closure(m, b) == (b | c | d));
  CHECK(is_independent(m, a | e));
  CHECK(!is_independent(m, b | c));
  CHECK(is_basis(m, a | b));
  CHECK(!is_basis(m, b | c));
  CHECK(as_set(circuits(m)) == std::set<Mask>{d, b | c, a | b | e, a | c | e});
  CHECK(is_circuit(m, b | c));
  CHECK(!is_circuit(m, b | c | d));
}

TEST_CASE("the flats of the two-point union example") {
  Matroid m = fixtures::five_point_rank2();
  // d alone, the b,c,d plane of the parallel pair, a with the loop, e with
  // the loop, and everything.
  const std::set<Mask> expected{0b01000, 0b01110, 0b01001, 0b11000, 0b11111};
  CHECK(as_set(flats(m)) == expected);
  for (Mask f : expected) CHECK(is_flat(m, f));
  CHECK(!is_flat(m, 0b00001));
  // It is the union of two rank-1 matroids split by their loop sets.
  Matroid g = Matroid::from_rank_fn(m.ground(), [](Mask x) { return (x & 0b00111) ? 1 : 0; });
  Matroid h = Matroid::from_rank_fn(m.ground(), [](Mask x) { return (x & 0b10001) ? 1 : 0; });
  CHECK(equals(matroid_union(g, h), m));
}

TEST_CASE("fundamental circuits") {
  Matroid m = fixtures::five_point_rank2();
  const Mask basis = 0b00011;  // {a, b}
  CHECK(fundamental_circuit(m, basis, 2) == 0b00110);   // c with b
  CHECK(fundamental_circuit(m, basis, 3) == 0b01000);   // the loop alone
  CHECK(fundamental_circuit(m, basis, 4) == 0b10011);   // e across the line
  CHECK_THROWS_AS(fundamental_circuit(m, 0b00110, 0), NotABasis);
  CHECK_THROWS_AS(fundamental_circuit(m, basis, 1), ElementInBasis);
}

TEST_CASE("cyclic sets and cyclic flats") {
  Matroid m = fixtures::five_point_rank2();
  CHECK(is_cyclic(m, 0));
  CHECK(is_cyclic(m, 0b01000));
  CHECK(is_cyclic(m, 0b01110));
  CHECK(!is_cyclic(m, 0b00001));
  CHECK(as_set(cyclic_flats(m)) == std::set<Mask>{0b01000, 0b01110, 0b11111});
}

TEST_CASE("duality") {
  Matroid u = uniform(2, {"1", "2", "3", "4"});
  Matroid d = dual(u);
  CHECK(d.rank() == 2);
  CHECK(equals(d, u));  // U_{2,4} is self-dual
  Matroid m = fixtures::five_point_rank2();
  CHECK(dual(m).rank() == 3);
  CHECK(equals(dual(dual(m)), m));
  CHECK(loops(dual(m)) == coloops(m));
}

TEST_CASE("minors keep label order") {
  Matroid m = fixtures::five_point_rank2();
  Matroid del = minor(m, 0b01000, 0);  // drop the loop
  CHECK(del.ground().labels() == std::vector<std::string>{"a", "b", "c", "e"});
  CHECK(del.rank() == 2);
  Matroid con = minor(m, 0, 0b00001);  // contract a
  CHECK(con.rank() == 1);
  CHECK(loops(con) == 0b0100);  // d stays a loop
  CHECK_THROWS_AS(minor(m, 0b00001, 0b00001), OverlappingSets);
  // Deleting then contracting commutes with doing both at once.
  Matroid two = minor(m, 0b00100, 0b00001);
  CHECK(equals(two, minor(minor(m, 0b00100, 0), 0, 0b00001)));
}

TEST_CASE("equality and the weak order need one ground set") {
  Matroid u1 = uniform(1, {"a", "b"});
  Matroid u2 = uniform(2, {"a", "b"});
  CHECK(weak_leq(u1, u2));
  CHECK(!weak_leq(u2, u1));
  CHECK(!equals(u1, u2));
  Matroid other = uniform(1, {"x", "y"});
  CHECK_THROWS_AS(equals(u1, other), GroundSetMismatch);
  CHECK_THROWS_AS(weak_leq(u1, other), GroundSetMismatch);
}

TEST_CASE("quotients via closure containment") {
  Matroid u2 = uniform(2, {"a", "b", "c"});
  Matroid u1 = uniform(1, {"a", "b", "c"});
  CHECK(is_quotient(u1, u2));
  CHECK(!is_quotient(u2, u1));
  CHECK(is_quotient(u2, u2));
  // Truncation is always a quotient; a loop-planting deletion is not a
  // quotient of the original in general.
  Matroid m = fixtures::whirl3();
  CHECK(is_quotient(truncation(m, 2), m));
}

TEST_CASE("separators and connectivity") {
  Matroid whirl = fixtures::whirl3();
  CHECK(is_connected(whirl));
  CHECK(as_set(separators(whirl)) == std::set<Mask>{0, whirl.full()});
  Matroid pairs = fixtures::three_parallel_pairs();
  CHECK(!is_connected(pairs));
  CHECK(separators(pairs).size() == 8);  // unions of the three components
  Matroid single = uniform(1, {"a"});
  CHECK(is_connected(single));
}

TEST_CASE("region classification matches the two rank terms") {
  Matroid m = uniform(2, {"s1", "s2", "s3"});
  Matroid n = uniform(1, {"t1", "t2"});
  const Mask a = 0b011, b = 0b01;
  for (Mask x = 0; x <= m.full(); ++x) {
    for (Mask y = 0; y <= n.full(); ++y) {
      const int first = m.rank(x | a) + n.rank(y);
      const int second = m.rank(x) + n.rank(y & ~b) + popcount(y & b);
      RegionClass want = first < second  ? RegionClass::Less
                         : first > second ? RegionClass::Greater
                                          : RegionClass::Equal;
      CHECK(classify_region(m, n, a, b, x, y) == want);
    }
  }
}

TEST_CASE("relabeling and reordering") {
  Matroid m = uniform(1, {"a", "b"});
  Matroid renamed = with_labels(m, {"x", "y"});
  CHECK(renamed.ground().labels() == std::vector<std::string>{"x", "y"});
  CHECK(renamed.rank() == 1);
  Matroid swapped = reordered(fixtures::five_point_rank2(),
                              {"e", "d", "c", "b", "a"});
  CHECK(swapped.rank() == 2);
  CHECK(loops(swapped) == 0b00010);
  CHECK(equals(reordered(swapped, {"a", "b", "c", "d", "e"}),
               fixtures::five_point_rank2()));
  CHECK(translate_mask(swapped.ground(), 0b00011,
                       fixtures::five_point_rank2().ground()) == 0b11000);
}
