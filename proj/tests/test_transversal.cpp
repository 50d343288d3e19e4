#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/fixtures.hpp"
#include "matroid/transversal.hpp"
#include "matroid/verify.hpp"
#include "oracles.hpp"

using namespace matroid;

TEST_CASE("transversal matroid frozen examples") {
  SetSystem sys{GroundSet({"a", "b", "c"}), {0b011, 0b110}};
  Matroid m = transversal_matroid(sys);
  CHECK(equals(m, uniform(2, {"a", "b", "c"})));
  SetSystem empty{GroundSet({"a", "b"}), {}};
  CHECK(equals(transversal_matroid(empty), loops_on({"a", "b"})));
  SetSystem covered{GroundSet({"a", "b"}), {0b01, 0b10}};
  CHECK(equals(transversal_matroid(covered), free_matroid({"a", "b"})));
}

TEST_CASE("matching rank equals the deficiency formula") {
  verify::InstanceGen gen(701);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + int(gen.rng().below(6));
    SetSystem sys{GroundSet(verify::s_labels(n)), {}};
    const int k = int(gen.rng().below(n + 2));
    for (int i = 0; i < k; ++i) sys.sets.push_back(gen.rng().submask(sys.ground.full()));
    Matroid m = transversal_matroid(sys);
    for (Mask x = 0; x <= m.full(); ++x) {
      REQUIRE(m.rank(x) == oracles::deficiency_rank(sys, x));
      if (x == m.full()) break;
    }
  }
}

TEST_CASE("inclusion-exclusion verdicts on fixtures") {
  CHECK(is_transversal(fixtures::five_point_rank2()).pass);
  CHECK(is_transversal(uniform(2, {"a", "b", "c", "d"})).pass);
  CheckReport bad = is_transversal(fixtures::truncated_pairs());
  CHECK(!bad.pass);
  CHECK(!bad.witness.is_null());  // names the offending flat family
  CHECK(is_fundamental_transversal(uniform(2, {"a", "b", "c", "d"})).pass);
  Matroid pairsum = fixtures::three_parallel_pairs();
  CHECK(is_fundamental_transversal(pairsum).pass);
}

TEST_CASE("matching-based verdict agrees with presentation search") {
  verify::InstanceGen gen(702);
  for (int it = 0; it < 40; ++it) {
    const int n = 1 + int(gen.rng().below(6));
    Matroid m = gen.matroid(verify::s_labels(n));
    bool ie;
    try {
      ie = is_transversal(m).pass;
    } catch (const CyclicFlatCapExceeded&) {
      continue;
    }
    PresentationSearchResult found;
    try {
      found = presentation_search(m);
    } catch (const SearchBudgetExceeded&) {
      continue;
    }
    REQUIRE(ie == found.found);
    if (found.found) REQUIRE(equals(transversal_matroid(found.system), m));
  }
}

TEST_CASE("presentation search on non-transversal input reports absence") {
  PresentationSearchResult r = presentation_search(fixtures::truncated_pairs());
  CHECK(!r.found);
}

TEST_CASE("fundamental presentations have private elements") {
  SetSystem priv{GroundSet({"a", "b", "c", "d"}), {0b0011, 0b1110}};
  CHECK(has_fundamental_presentation(priv));  // a private, d private
  SetSystem shared{GroundSet({"a", "b"}), {0b11, 0b11}};
  CHECK(!has_fundamental_presentation(shared));
  CHECK(has_fundamental_presentation(SetSystem{GroundSet({"a"}), {}}));
}

TEST_CASE("random fundamental systems produce fundamental matroids") {
  verify::InstanceGen gen(703);
  for (int it = 0; it < 25; ++it) {
    const int n = 1 + int(gen.rng().below(6));
    auto inst = gen.fundamental_transversal_on(verify::s_labels(n));
    CHECK(has_fundamental_presentation(SetSystem{inst.m.ground(), inst.sets}));
    CHECK(is_fundamental_transversal(inst.m).pass);
    // Duals of fundamental transversal matroids stay fundamental.
    CHECK(is_fundamental_transversal(dual(inst.m)).pass);
  }
}

TEST_CASE("the frozen anchored sum is transversal but not fundamental") {
  fixtures::FrozenSum fs = fixtures::nonfundamental_principal_sum();
  CHECK(is_fundamental_transversal(fs.m).pass);
  CHECK(is_fundamental_transversal(fs.n).pass);
  Matroid p = principal_sum(fs.m, fs.n, fs.a, fs.b);
  CHECK(is_transversal(p).pass);
  CHECK(!is_fundamental_transversal(p).pass);
}

TEST_CASE("cyclic flat cap is enforced") {
  // Four parallel pairs: every union of pairs is a cyclic flat, 16 total.
  Matroid m = direct_sum(fixtures::three_parallel_pairs(),
                         uniform(1, {"w1", "w2"}));
  CHECK_THROWS_AS(is_transversal(m), CyclicFlatCapExceeded);
  CHECK(is_transversal(m, 16).pass);
  CHECK_THROWS_AS(presentation_search(uniform(2, {"a", "b", "c", "d"}), 1),
                  SearchBudgetExceeded);
}

TEST_CASE("class is stable under loops, coloops, restriction, cyclic contraction") {
  verify::InstanceGen gen(709);
  int done = 0;
  while (done < 40) {
    const int n = 1 + int(gen.rng().below(5));
    const auto labels = verify::s_labels(n);
    Matroid m = gen.rng().chance(1, 2) ? gen.transversal_on(labels)
                                       : gen.matroid(labels);
    try {
      const bool tv = is_transversal(m).pass;
      const bool ftv = is_fundamental_transversal(m).pass;

      // A new loop or coloop changes neither verdict, in either direction.
      Matroid withLoop = add_loops(m, {"w"});
      Matroid withColoop = direct_sum(m, free_matroid({"w"}));
      CHECK(is_transversal(withLoop).pass == tv);
      CHECK(is_fundamental_transversal(withLoop).pass == ftv);
      CHECK(is_transversal(withColoop).pass == tv);
      CHECK(is_fundamental_transversal(withColoop).pass == ftv);

      // Restrictions of transversal matroids are transversal.
      const Mask del = gen.rng().submask(m.full());
      if (tv) CHECK(is_transversal(minor(m, del, 0)).pass);

      // Contractions by cyclic sets keep both classes.
      std::vector<Mask> cyc;
      for (Mask x = 0;; ++x) {
        if (is_cyclic(m, x)) cyc.push_back(x);
        if (x == m.full()) break;
      }
      const Mask z = cyc[size_t(gen.rng().below(int(cyc.size())))];
      Matroid contracted = minor(m, 0, z);
      if (tv) CHECK(is_transversal(contracted).pass);
      if (ftv) CHECK(is_fundamental_transversal(contracted).pass);

      // For a cyclic flat Z, the cyclic flats of M/Z are exactly the sets
      // W - Z with W a cyclic flat of M containing Z.
      const Mask zf = closure(m, z);
      if (is_cyclic(m, zf)) {
        Matroid byFlat = minor(m, 0, zf);
        std::set<std::vector<std::string>> expect;
        for (Mask w : cyclic_flats(m))
          if (subset_of(zf, w)) expect.insert(m.ground().labels_of(w & ~zf));
        std::set<std::vector<std::string>> got;
        for (Mask w : cyclic_flats(byFlat))
          got.insert(byFlat.ground().labels_of(w));
        CHECK(expect == got);
      }
    } catch (const CyclicFlatCapExceeded&) {
      continue;
    }
    ++done;
  }
}
