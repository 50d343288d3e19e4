#include "matroid/verify.hpp"

#include <atomic>
#include <thread>

#include "matroid/constructions.hpp"
#include "matroid/linearalg.hpp"
#include "matroid/transversal.hpp"

namespace matroid::verify {

std::uint64_t subseed(std::uint64_t master, const std::string& check_id) {
  // FNV-1a over the id, mixed with the master seed.
  std::uint64_t h = 14695981039346656037ull ^ master;
  for (unsigned char c : check_id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> s_labels(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("s" + std::to_string(i));
  return v;
}

std::vector<std::string> t_labels(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

std::vector<std::string> u_labels(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

Matroid InstanceGen::transversal_on(const std::vector<std::string>& labels) {
  SetSystem sys;
  sys.ground = GroundSet(labels);
  const int n = sys.ground.size();
  const int k = rng_.range(0, n);
  for (int i = 0; i < k; ++i) sys.sets.push_back(rng_.submask(sys.ground.full()));
  return transversal_matroid(sys);
}

InstanceGen::FundamentalInstance InstanceGen::fundamental_transversal_on(
    const std::vector<std::string>& labels) {
  // Give every set a distinct private element first, then sprinkle extras.
  GroundSet g(labels);
  const int n = g.size();
  const int k = rng_.range(0, n);
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(rng_.below(i + 1))]);
  Mask privates = 0;
  for (int i = 0; i < k; ++i) privates |= bit(order[static_cast<size_t>(i)]);
  SetSystem sys;
  sys.ground = g;
  for (int i = 0; i < k; ++i) {
    const Mask mine = bit(order[static_cast<size_t>(i)]);
    sys.sets.push_back(mine | (rng_.submask(g.full()) & ~privates));
  }
  return FundamentalInstance{transversal_matroid(sys), sys.sets};
}

Matroid InstanceGen::matrix_on(const std::vector<std::string>& labels) {
  GroundSet g(labels);
  const int n = g.size();
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  const std::uint64_t p = primes[rng_.below(6)];
  const int rows = rng_.range(0, n);
  std::vector<std::uint64_t> e(static_cast<size_t>(rows) * static_cast<size_t>(n));
  for (auto& v : e) v = rng_.chance(1, 3) ? 0 : rng_.next() % p;
  return column_matroid(FpMatrix(p, rows, g, std::move(e)));
}

Matroid InstanceGen::basic(const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  switch (rng_.below(3)) {
    case 0:
      return uniform(rng_.range(0, n), labels);
    case 1:
      return transversal_on(labels);
    default:
      return matrix_on(labels);
  }
}

Matroid InstanceGen::matroid(const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  const int roll = rng_.below(8);
  if (roll < 6 || n + 2 > GroundSet::max_size()) {
    Matroid m = basic(labels);
    if (roll == 5) return dual(m);
    return m;
  }
  // Minor of a larger instance on two extra elements.
  std::vector<std::string> ext = labels;
  ext.push_back("__m1");
  ext.push_back("__m2");
  Matroid big = basic(ext);
  const Mask extra = bit(n) | bit(n + 1);
  const Mask del = rng_.submask(extra);
  return with_labels(minor(big, del, extra & ~del), labels);
}

Matroid InstanceGen::quotient_of(const Matroid& l) {
  Matroid q = l;
  const int steps = 1 + rng_.below(2);
  for (int i = 0; i < steps; ++i) {
    if (rng_.chance(1, 2)) {
      q = truncation(q, rng_.range(0, q.rank()));
    } else {
      q = contract_keep_loops(q, rng_.submask(q.full()));
    }
  }
  return q;
}

std::pair<Matroid, Matroid> InstanceGen::quotient_pair(
    const std::vector<std::string>& labels) {
  Matroid l = matroid(labels);
  return {quotient_of(l), l};
}

Matroid InstanceGen::lift_of(const Matroid& n) {
  if (rng_.chance(1, 2)) return delete_keep_coloops(n, rng_.submask(n.full()));
  return dual(quotient_of(dual(n)));
}

Matroid InstanceGen::rank_preserving_extension(
    const Matroid& m, const std::vector<std::string>& t_labels) {
  Matroid k = m;
  for (const auto& t : t_labels) {
    // Any subset works: placing the new element on the span of a subset of
    // the current ground never raises the rank (empty subset = new loop).
    k = principal_extension(k, rng_.submask(k.full()), t);
  }
  return k;
}

const std::vector<CheckEntry>& registry();  // defined in checks.cpp

CheckReport run_check(const std::string& id, const CheckParams& params) {
  for (const CheckEntry& e : registry())
    if (id == e.id) return e.fn(params);
  throw UnknownCheck(id);
}

std::vector<CheckReport> run_all(const CheckParams& params, int jobs) {
  const auto& reg = registry();
  if (jobs <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    jobs = hc ? static_cast<int>(hc) : 1;
  }
  std::vector<CheckReport> out(reg.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= reg.size()) return;
      out[i] = reg[i].fn(params);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(jobs, static_cast<int>(reg.size()));
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace matroid::verify
