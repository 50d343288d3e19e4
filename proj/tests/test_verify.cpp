#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/json_io.hpp"
#include "matroid/transversal.hpp"
#include "matroid/verify.hpp"

using namespace matroid;
using verify::CheckParams;
using verify::InstanceGen;

TEST_CASE("subseeds are stable and distinct per check") {
  CHECK(verify::subseed(5, "alpha") == verify::subseed(5, "alpha"));
  CHECK(verify::subseed(5, "alpha") != verify::subseed(5, "beta"));
  CHECK(verify::subseed(5, "alpha") != verify::subseed(6, "alpha"));
}

TEST_CASE("registry ids are unique and runnable by name") {
  std::set<std::string> ids;
  for (const auto& e : verify::registry()) ids.insert(e.id);
  CHECK(ids.size() == verify::registry().size());
  CHECK(ids.size() == 25);
  CHECK_THROWS_AS(verify::run_check("no_such_check", CheckParams{}),
                  UnknownCheck);
}

TEST_CASE("identical parameters replay identical reports") {
  CheckParams p;
  p.seed = 99;
  p.instances = 20;
  p.max_ns = 4;
  p.max_nt = 4;
  CheckReport a = verify::run_check("check_principal_rank", p);
  CheckReport b = verify::run_check("check_principal_rank", p);
  CHECK(a.pass);
  CHECK(io::report_to_json(a) == io::report_to_json(b));
}

TEST_CASE("thread count does not change the reports") {
  CheckParams p;
  p.seed = 3;
  p.instances = 5;
  p.max_ns = 4;
  p.max_nt = 4;
  auto solo = verify::run_all(p, 1);
  auto wide = verify::run_all(p, 4);
  REQUIRE(solo.size() == wide.size());
  for (size_t i = 0; i < solo.size(); ++i)
    CHECK(io::report_to_json(solo[i]) == io::report_to_json(wide[i]));
}

TEST_CASE("report json shape") {
  CheckParams p;
  p.instances = 2;
  p.max_ns = 3;
  p.max_nt = 3;
  CheckReport r = verify::run_check("check_associativity", p);
  auto j = io::report_to_json(r);
  CHECK(j.contains("theorem"));
  CHECK(j["status"] == "pass");
  CHECK(j["instances"].get<int>() == 2);
  CHECK(j.contains("seed"));
  CHECK(j["witness"].is_null());
}

TEST_CASE("generator contracts") {
  InstanceGen gen(11);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + int(gen.rng().below(6));
    Matroid m = gen.matroid(verify::s_labels(n));
    CHECK(m.ground().size() == n);  // construction itself validates axioms
  }
  for (int it = 0; it < 15; ++it) {
    auto [q, l] = gen.quotient_pair(verify::s_labels(1 + int(gen.rng().below(5))));
    CHECK(is_quotient(q, l));
  }
}

TEST_CASE("rank preserving extensions restrict back to the original") {
  InstanceGen gen(12);
  for (int it = 0; it < 20; ++it) {
    const int ns = 1 + int(gen.rng().below(4));
    const int nt = int(gen.rng().below(4));
    Matroid m = gen.matroid(verify::s_labels(ns));
    Matroid big = gen.rank_preserving_extension(m, verify::t_labels(nt));
    CHECK(big.rank() == m.rank());
    CHECK(big.ground().size() == ns + nt);
    CHECK(equals(minor(big, low_bits(nt) << ns, 0), m));
  }
  Matroid m = uniform(2, {"s1", "s2", "s3"});
  CHECK(equals(gen.rank_preserving_extension(m, {}), m));
}

TEST_CASE("lift generator inverts the quotient relation") {
  InstanceGen gen(13);
  for (int it = 0; it < 15; ++it) {
    Matroid n = gen.matroid(verify::s_labels(1 + int(gen.rng().below(5))));
    Matroid l = gen.lift_of(n);
    CHECK(is_quotient(n, l));
  }
}

TEST_CASE("fundamental generator yields presentations with privates") {
  InstanceGen gen(14);
  for (int it = 0; it < 15; ++it) {
    auto inst = gen.fundamental_transversal_on(verify::t_labels(2 + int(gen.rng().below(5))));
    CHECK(has_fundamental_presentation(SetSystem{inst.m.ground(), inst.sets}));
    CHECK(equals(transversal_matroid(SetSystem{inst.m.ground(), inst.sets}),
                 inst.m));
  }
}

TEST_CASE("label helpers") {
  CHECK(verify::s_labels(2) == std::vector<std::string>{"s1", "s2"});
  CHECK(verify::t_labels(1) == std::vector<std::string>{"t1"});
  CHECK(verify::u_labels(3) == std::vector<std::string>{"u1", "u2", "u3"});
}
