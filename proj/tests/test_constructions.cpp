#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/fixtures.hpp"
#include "matroid/verify.hpp"
#include "oracles.hpp"

using namespace matroid;

namespace {
std::set<Mask> as_set(const std::vector<Mask>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("building blocks") {
  Matroid u = uniform(2, {"a", "b", "c", "d"});
  CHECK(u.rank() == 2);
  CHECK(u.rank(0b0111) == 2);
  CHECK_THROWS_AS(uniform(5, {"a", "b"}), RankOutOfRange);
  CHECK(free_matroid({"a", "b", "c"}).rank() == 3);
  CHECK(loops_on({"a", "b"}).rank() == 0);
  CHECK(loops_on({}).ground().size() == 0);
}

TEST_CASE("direct sum keeps the factor order") {
  Matroid d = direct_sum(uniform(1, {"s1", "s2"}), uniform(2, {"t1", "t2", "t3"}));
  CHECK(d.ground().labels() ==
        std::vector<std::string>{"s1", "s2", "t1", "t2", "t3"});
  CHECK(d.rank() == 3);
  CHECK(d.rank(0b00011) == 1);
  CHECK(d.rank(0b01100) == 2);
  CHECK(as_set(separators(d)).count(0b00011) == 1);
  CHECK_THROWS_AS(direct_sum(d, uniform(1, {"s1"})), LabelCollision);
}

TEST_CASE("added loops come first in the ground order") {
  Matroid n = uniform(1, {"t1", "t2"});
  Matroid padded = add_loops(n, {"s1", "s2"});
  CHECK(padded.ground().labels() ==
        std::vector<std::string>{"s1", "s2", "t1", "t2"});
  CHECK(loops(padded) == 0b0011);
  CHECK(padded.rank() == 1);
}

TEST_CASE("union agrees with the split-independence oracle") {
  verify::InstanceGen gen(501);
  for (int it = 0; it < 15; ++it) {
    const int n = 1 + int(gen.rng().below(6));
    auto labels = verify::s_labels(n);
    Matroid g = gen.matroid(labels);
    Matroid h = gen.matroid(labels);
    Matroid u = matroid_union(g, h);
    for (Mask x = 0; x <= u.full(); ++x) {
      REQUIRE(u.rank(x) == oracles::union_rank(g, h, x));
      if (x == u.full()) break;
    }
  }
}

TEST_CASE("union frozen values") {
  Matroid u13 = uniform(1, {"a", "b", "c"});
  CHECK(equals(matroid_union(u13, u13), uniform(2, {"a", "b", "c"})));
  Matroid u24 = uniform(2, {"a", "b", "c", "d"});
  CHECK(equals(matroid_union(u24, u24), free_matroid({"a", "b", "c", "d"})));
  // Deleting commutes with the union; contracting does not.
  Matroid whole = minor(matroid_union(u24, u24), 0, 0b0001);
  Matroid parts = matroid_union(minor(u24, 0, 0b0001), minor(u24, 0, 0b0001));
  CHECK(whole.rank() == 3);
  CHECK(parts.rank() == 2);
  CHECK(!equals(whole, parts));
  CHECK_THROWS_AS(matroid_union(u24, uniform(1, {"x", "y"})), GroundSetMismatch);
}

TEST_CASE("intersection is the dual of the union of duals") {
  Matroid u23 = uniform(2, {"a", "b", "c"});
  CHECK(equals(matroid_intersection(u23, u23), uniform(1, {"a", "b", "c"})));
  Matroid m = fixtures::five_point_rank2();
  CHECK(equals(matroid_intersection(m, m),
               dual(matroid_union(dual(m), dual(m)))));
}

TEST_CASE("principal extension") {
  Matroid u23 = uniform(2, {"a", "b", "c"});
  Matroid onFull = principal_extension(u23, 0b111, "d");
  CHECK(equals(onFull, uniform(2, {"a", "b", "c", "d"})));
  Matroid onPoint = principal_extension(u23, 0b001, "d");
  CHECK(onPoint.rank(0b1001) == 1);  // d parallel to a
  CHECK(onPoint.rank() == 2);
  Matroid onEmpty = principal_extension(u23, 0, "d");
  CHECK(loops(onEmpty) == 0b1000);
  CHECK_THROWS_AS(principal_extension(u23, 0b001, "a"), LabelCollision);
}

TEST_CASE("flat extension equals iterated principal extensions") {
  verify::InstanceGen gen(502);
  for (int it = 0; it < 20; ++it) {
    const int ns = 1 + int(gen.rng().below(4));
    const int nt = 1 + int(gen.rng().below(3));
    Matroid m = gen.matroid(verify::s_labels(ns));
    const Mask a = gen.rng().submask(m.full());
    const auto ts = verify::t_labels(nt);
    const Mask bmask = gen.rng().submask(low_bits(nt));
    Matroid viaFlat = extension_on_flat(m, a, ts, bmask);
    CHECK(viaFlat.ground().size() == ns + nt);
    // Same thing one element at a time: free-on-A for B's labels, then
    // loops, then restore the interleaved label order.
    Matroid step = m;
    std::vector<std::string> loopLabels;
    for (int i = 0; i < nt; ++i) {
      if (bmask & bit(i))
        step = principal_extension(step, a, ts[size_t(i)]);
      else
        loopLabels.push_back(ts[size_t(i)]);
    }
    step = reordered(add_loops(step, loopLabels), viaFlat.ground().labels());
    CHECK(equals(step, viaFlat));
  }
}

TEST_CASE("principal sum frozen table") {
  Matroid m = uniform(1, {"s1", "s2"});
  Matroid n = uniform(1, {"t1", "t2"});
  Matroid p = principal_sum(m, n, 0b01, 0b01);
  CHECK(p.rank() == 2);
  CHECK(p.rank(0b0011) == 1);   // S stays a parallel pair
  CHECK(p.rank(0b1100) == 2);   // t1 was lifted onto A, freeing T
  CHECK(as_set(circuits(p)) ==
        std::set<Mask>{0b0011, 0b1101, 0b1110});
  // Anchor masks validate against the factor grounds.
  CHECK_THROWS_AS(principal_sum(m, n, 0b100, 0), UnknownLabel);
  CHECK_THROWS_AS(principal_sum(m, n, 0, 0b100), UnknownLabel);
}

TEST_CASE("free product is the all-in principal sum") {
  Matroid m = uniform(1, {"s1", "s2"});
  Matroid n = uniform(1, {"t1", "t2"});
  Matroid fp = free_product(m, n);
  CHECK(equals(fp, principal_sum(m, n, m.full(), n.full())));
  CHECK(fp.rank(0b1100) == 2);
  // Independent sets: |I| - r_N(I n T) <= r(M) - |I n S| with I n S
  // independent in M.
  for (Mask w = 0; w <= fp.full(); ++w) {
    const Mask x = w & 0b0011, y = w >> 2;
    const bool expect = is_independent(m, x) &&
                        popcount(y) - n.rank(y) <= m.rank() - popcount(x);
    CHECK(is_independent(fp, w) == expect);
    if (w == fp.full()) break;
  }
}

TEST_CASE("rank shifts") {
  Matroid f = free_matroid({"a", "b", "c"});
  CHECK(equals(truncation(f, 2), uniform(2, {"a", "b", "c"})));
  CHECK(equals(truncation(f, 3), f));
  CHECK_THROWS_AS(truncation(f, 4), RankOutOfRange);
  CHECK(equals(free_extension(uniform(2, {"a", "b", "c"}), "d"),
               uniform(2, {"a", "b", "c", "d"})));
  Matroid co = free_coextension(uniform(1, {"a", "b"}), "e");
  CHECK(co.rank() == 2);
  CHECK(equals(dual(co), free_extension(dual(uniform(1, {"a", "b"})), "e")));
}

TEST_CASE("higgs lift ladder") {
  Matroid q = uniform(1, {"a", "b", "c"});
  Matroid l = free_matroid({"a", "b", "c"});
  CHECK(equals(higgs_lift(q, l, 1), uniform(2, {"a", "b", "c"})));
  CHECK(equals(higgs_lift(q, l, 0), q));
  CHECK(equals(higgs_lift(q, l, -3), q));   // clamps at the quotient end
  CHECK(equals(higgs_lift(q, l, 9), l));    // clamps at the lift end
  CHECK_THROWS_AS(higgs_lift(l, q, 1), NotAQuotient);
}

TEST_CASE("higgs semidirect route splits correctly") {
  Matroid m = uniform(2, {"s1", "s2", "s3"});
  Matroid mq = truncation(m, 1);
  Matroid n = uniform(1, {"t1", "t2"});
  Matroid nl = free_matroid({"t1", "t2"});
  Matroid k = higgs_semidirect(m, mq, n, nl);
  CHECK(equals(minor(k, 0b11000, 0), m));
  CHECK(equals(minor(k, 0, 0b00111), n));
  CHECK(k.rank() == m.rank() + n.rank());
  CHECK_THROWS_AS(higgs_semidirect(mq, m, n, nl), NotAQuotient);
}

TEST_CASE("keep-loops and keep-coloops surgeries") {
  Matroid m = fixtures::five_point_rank2();
  Matroid c = contract_keep_loops(m, 0b00001);
  CHECK(c.ground().labels() == m.ground().labels());
  CHECK(c.rank() == 1);
  CHECK(loops(c) == 0b01001);  // a itself plus the old loop
  CHECK(is_quotient(c, m));
  Matroid d = delete_keep_loops(m, 0b10000);
  CHECK(d.rank(0b10000) == 0);
  CHECK(d.rank() == 2);
  Matroid dc = delete_keep_coloops(m, 0b01000);
  CHECK(dc.rank() == 3);  // the loop turned into a coloop
  CHECK(is_quotient(m, dc));
}

TEST_CASE("principal sum three ways on one seeded instance") {
  verify::InstanceGen gen(503);
  Matroid m = gen.matroid(verify::s_labels(3));
  Matroid n = gen.matroid(verify::t_labels(3));
  const Mask a = gen.rng().submask(m.full());
  const Mask b = gen.rng().submask(n.full());
  Matroid p = principal_sum(m, n, a, b);
  // Union route.
  Matroid mplus = extension_on_flat(m, a, n.ground().labels(), b);
  Matroid n0 = add_loops(n, m.ground().labels());
  CHECK(equals(p, matroid_union(mplus, n0)));
  // Ladder route.
  Matroid q = direct_sum(contract_keep_loops(m, a), n);
  Matroid l = direct_sum(m, delete_keep_coloops(n, b));
  CHECK(equals(p, higgs_lift(q, l, m.rank(a))));
}
