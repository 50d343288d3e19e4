#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/linearalg.hpp"
#include "matroid/verify.hpp"

using namespace matroid;

namespace {

FpMatrix mat(std::uint64_t p, int rows, std::vector<std::string> labels,
             std::vector<std::uint64_t> entries) {
  return FpMatrix(p, rows, GroundSet(std::move(labels)), std::move(entries));
}

}  // namespace

TEST_CASE("primality gate") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(2147483647));
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(!is_prime(4));
  CHECK(!is_prime(2147483649));
  CHECK_THROWS_AS(mat(6, 1, {"a"}, {1}), NonPrimeModulus);
  CHECK_THROWS_AS(mat(5, 2, {"a"}, {1}), DimensionMismatch);
}

TEST_CASE("entries reduce mod p") {
  FpMatrix d = mat(5, 1, {"a", "b"}, {7, 10});
  CHECK(d.at(0, 0) == 2);
  CHECK(d.at(0, 1) == 0);
}

TEST_CASE("column matroid frozen examples") {
  // c = a + b over GF(2), plus a zero column.
  FpMatrix d = mat(2, 2, {"a", "b", "c", "z"}, {1, 0, 1, 0, 0, 1, 1, 0});
  Matroid m = column_matroid(d);
  CHECK(m.rank() == 2);
  CHECK(loops(m) == 0b1000);
  CHECK(m.rank(0b0111) == 2);
  CHECK(!is_independent(m, 0b0111));
  CHECK(equals(minor(m, 0b1000, 0), uniform(2, {"a", "b", "c"})));
}

TEST_CASE("seven nonzero binary vectors make the rank-3 plane") {
  std::vector<std::uint64_t> e;
  std::vector<std::string> labels;
  for (int v = 1; v < 8; ++v) labels.push_back("v" + std::to_string(v));
  for (int row = 0; row < 3; ++row)
    for (int v = 1; v < 8; ++v) e.push_back((v >> row) & 1);
  Matroid fano = column_matroid(mat(2, 3, labels, e));
  CHECK(fano.rank() == 3);
  int threeCircuits = 0, threeBases = 0;
  for (Mask x = 0; x <= fano.full(); ++x) {
    if (popcount(x) == 3) {
      if (fano.rank(x) == 2) ++threeCircuits;
      if (fano.rank(x) == 3) ++threeBases;
    }
    if (x == fano.full()) break;
  }
  CHECK(threeCircuits == 7);
  CHECK(threeBases == 28);
}

TEST_CASE("submatrix rank agrees with the column matroid") {
  verify::InstanceGen gen(601);
  for (int it = 0; it < 10; ++it) {
    Matroid m = gen.matrix_on(verify::s_labels(1 + int(gen.rng().below(6))));
    (void)m;  // construction already validates
  }
  FpMatrix d = mat(7, 3, {"a", "b", "c", "d"},
                   {1, 2, 3, 0, 4, 5, 6, 0, 2, 0, 3, 0});
  Matroid m = column_matroid(d);
  for (Mask x = 0; x <= m.full(); ++x) {
    CHECK(m.rank(x) == submatrix_rank(d, x));
    if (x == m.full()) break;
  }
}

TEST_CASE("block triangular assembly") {
  FpMatrix a = mat(5, 2, {"s1", "s2"}, {1, 0, 0, 1});
  FpMatrix b = mat(5, 1, {"t1", "t2"}, {1, 1});
  FpMatrix u = mat(5, 2, {"t1", "t2"}, {1, 1, 1, 1});
  FpMatrix d = block_triangular(a, b, u);
  CHECK(d.rows() == 3);
  CHECK(d.cols() == 4);
  CHECK(d.ground().labels() ==
        std::vector<std::string>{"s1", "s2", "t1", "t2"});
  Matroid k = column_matroid(d);
  CHECK(k.rank() == 3);
  CHECK(k.rank(0b1100) == 1);  // equal T columns
  // Restriction to S is col(A); contracting S leaves col(B).
  CHECK(equals(minor(k, 0b1100, 0), column_matroid(a)));
  CHECK(equals(minor(k, 0, 0b0011), column_matroid(b)));
  CHECK_THROWS_AS(block_triangular(a, mat(7, 1, {"x"}, {1}), u),
                  DimensionMismatch);
  CHECK_THROWS_AS(block_triangular(a, b, mat(5, 1, {"t1", "t2"}, {1, 1})),
                  DimensionMismatch);
}

TEST_CASE("contraction block models contraction") {
  verify::InstanceGen gen(602);
  for (int it = 0; it < 12; ++it) {
    const int n = 2 + int(gen.rng().below(4));
    const int rows = 1 + int(gen.rng().below(n));
    std::vector<std::uint64_t> e(size_t(rows) * size_t(n));
    for (auto& v : e) v = gen.rng().next() % 7;
    FpMatrix d = mat(7, rows, verify::s_labels(n), std::move(e));
    Matroid whole = column_matroid(d);
    const Mask e1 = gen.rng().submask(whole.full() >> 1);  // keep one column
    Matroid byBlock = column_matroid(contraction_block(d, e1));
    CHECK(equals(byBlock, minor(whole, 0, e1)));
  }
}

TEST_CASE("generic union over a large prime") {
  CHECK_THROWS_AS(
      generic_union(mat(5, 1, {"a"}, {1}), mat(5, 1, {"a"}, {1}), 1),
      ModulusTooSmall);
  const std::uint64_t p = 2147483647;
  verify::InstanceGen gen(603);
  int exact = 0;
  const int cases = 25;
  for (int it = 0; it < cases; ++it) {
    const int n = 1 + int(gen.rng().below(5));
    const int rg = 1 + int(gen.rng().below(n));
    const int rh = 1 + int(gen.rng().below(n));
    std::vector<std::uint64_t> eg(size_t(rg) * size_t(n)), eh(size_t(rh) * size_t(n));
    for (auto& v : eg) v = gen.rng().chance(1, 3) ? 0 : gen.rng().next() % p;
    for (auto& v : eh) v = gen.rng().chance(1, 3) ? 0 : gen.rng().next() % p;
    FpMatrix g = mat(p, rg, verify::s_labels(n), std::move(eg));
    FpMatrix h = mat(p, rh, verify::s_labels(n), std::move(eh));
    Matroid truth = matroid_union(column_matroid(g), column_matroid(h));
    Matroid guessed = generic_union(g, h, 1000 + std::uint64_t(it));
    CHECK(weak_leq(guessed, truth));  // never freer than the true union
    if (equals(guessed, truth)) ++exact;
  }
  CHECK(exact == cases);  // misses have probability ~ n 2^n r / p per trial
}
