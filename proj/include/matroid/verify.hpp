#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matroid/check_report.hpp"
#include "matroid/matroid.hpp"

namespace matroid::verify {

struct CheckParams {
  std::uint64_t seed = 20260814;
  int instances = 500;
  int max_ns = 5;  // largest first ground
  int max_nt = 5;  // largest second ground
};

// Deterministic RNG wrapper.  Only raw mt19937_64 output is consumed (the
// distributions in <random> are not portable across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
  bool chance(int num, int den) { return below(den) < num; }
  Mask submask(Mask m) {
    return static_cast<Mask>(next()) & m;
  }

 private:
  std::mt19937_64 eng_;
};

// Stable per-check sub-seed so checks can run in any order or in parallel
// without changing any report.
std::uint64_t subseed(std::uint64_t master, const std::string& check_id);

// Seeded matroid source mixing uniform, transversal-system, matrix-column,
// minor-of-larger and dual generators.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  Matroid matroid(const std::vector<std::string>& labels);
  Matroid transversal_on(const std::vector<std::string>& labels);
  // Column matroid of a random small-prime matrix.
  Matroid matrix_on(const std::vector<std::string>& labels);
  // Random system that presents a fundamental transversal matroid (every
  // set keeps a private element).
  struct FundamentalInstance {
    Matroid m;
    std::vector<Mask> sets;
  };
  FundamentalInstance fundamental_transversal_on(const std::vector<std::string>& labels);

  // q is a quotient of l (iterated truncations / flat contractions).
  std::pair<Matroid, Matroid> quotient_pair(const std::vector<std::string>& labels);
  Matroid quotient_of(const Matroid& l);
  Matroid lift_of(const Matroid& n);

  // Extension of m to m's ground followed by t_labels with unchanged rank,
  // built by composing principal extensions over arbitrary subsets.
  Matroid rank_preserving_extension(const Matroid& m,
                                    const std::vector<std::string>& t_labels);

  Rng& rng() { return rng_; }

 private:
  Matroid basic(const std::vector<std::string>& labels);
  Rng rng_;
};

// All labels "s1","s2",... / "t1","t2",... / "u1","u2",...
std::vector<std::string> s_labels(int n);
std::vector<std::string> t_labels(int n);
std::vector<std::string> u_labels(int n);

using CheckFn = CheckReport (*)(const CheckParams&);

struct CheckEntry {
  const char* id;
  CheckFn fn;
};

const std::vector<CheckEntry>& registry();

// Throws UnknownCheck for unregistered ids.
CheckReport run_check(const std::string& id, const CheckParams& params);

// Runs every registered check (in up to `jobs` threads); the report order
// and contents are independent of the thread count.
std::vector<CheckReport> run_all(const CheckParams& params, int jobs = 0);

}  // namespace matroid::verify
