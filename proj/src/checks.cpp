// The executable property suite: every registered check draws seeded random
// instances (or walks a fixed fixture battery), tests one structural identity
// of the semidirect-sum constructions, and reports the first counterexample
// found, if any.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/fixtures.hpp"
#include "matroid/json_io.hpp"
#include "matroid/transversal.hpp"
#include "matroid/verify.hpp"

namespace matroid::verify {
namespace {

using nlohmann::json;

json jm(const Matroid& m) { return io::matroid_to_json(m); }
json jset(const GroundSet& g, Mask x) { return json(g.labels_of(x)); }

CheckReport fresh(const char* id, const CheckParams& p) {
  CheckReport r;
  r.id = id;
  r.seed = subseed(p.seed, id);
  return r;
}


// Greedy basis of the restriction m|f (lowest labels first).
Mask greedy_basis(const Matroid& m, Mask f) {
  Mask b = 0;
  for_each_bit(f, [&](int e) {
    if (m.rank(b | bit(e)) > m.rank(b)) b |= bit(e);
  });
  return b;
}

// Elements of f that no circuit of m|f passes through.
Mask restriction_coloops(const Matroid& m, Mask f) {
  Mask out = 0;
  for_each_bit(f, [&](int e) {
    if (m.rank(f & ~bit(e)) + 1 == m.rank(f)) out |= bit(e);
  });
  return out;
}

// One random (M, N; A, B) instance together with its principal sum.
struct SumInstance {
  int ns = 0;
  int nt = 0;
  Matroid m, n, p;
  Mask a = 0;
  Mask b = 0;
};

SumInstance draw_sum(InstanceGen& gen, const CheckParams& par) {
  SumInstance s;
  s.ns = gen.rng().range(1, par.max_ns);
  s.nt = gen.rng().range(1, par.max_nt);
  s.m = gen.matroid(s_labels(s.ns));
  s.n = gen.matroid(t_labels(s.nt));
  s.a = gen.rng().submask(s.m.full());
  s.b = gen.rng().submask(s.n.full());
  s.p = principal_sum(s.m, s.n, s.a, s.b);
  return s;
}

json jsum(const SumInstance& s) {
  return json{{"M", jm(s.m)},
              {"N", jm(s.n)},
              {"A", jset(s.m.ground(), s.a)},
              {"B", jset(s.n.ground(), s.b)}};
}

// The principal-sum rank table straight from the two-term minimum, without
// the axiom validation done by the constructor (used where thousands of
// tables per instance are compared).
std::vector<std::uint8_t> psum_table(const Matroid& m, const Matroid& n,
                                     Mask a, Mask b) {
  const int ns = m.size();
  const Mask sfull = m.full(), tfull = n.full();
  std::vector<std::uint8_t> t(size_t(1) << (ns + n.size()));
  for (Mask y = 0;; ++y) {
    const int viaB = n.rank(y & ~b) + popcount(y & b);
    const int whole = n.rank(y);
    for (Mask x = 0;; ++x) {
      t[x | (y << ns)] = static_cast<std::uint8_t>(
          std::min(m.rank(x | a) + whole, m.rank(x) + viaB));
      if (x == sfull) break;
    }
    if (y == tfull) break;
  }
  return t;
}

// All matroids on g, enumerated through their basis collections.  Meant for
// tiny grounds (the largest use below is five elements).
std::vector<Matroid> all_matroids_on(const GroundSet& g) {
  const int n = g.size();
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Mask> ksets;
    for (Mask x = 0; x <= g.full(); ++x)
      if (popcount(x) == k) ksets.push_back(x);
    const int kn = static_cast<int>(ksets.size());
    for (std::uint32_t pick = 1; pick < (1u << kn); ++pick) {
      std::unordered_set<Mask> fam;
      for (int i = 0; i < kn; ++i)
        if (pick & (1u << i)) fam.insert(ksets[size_t(i)]);
      bool exchange = true;
      for (Mask b1 : fam) {
        for (Mask b2 : fam) {
          if (b1 == b2) continue;
          for_each_bit(b1 & ~b2, [&](int x) {
            bool found = false;
            for_each_bit(b2 & ~b1, [&](int y) {
              if (fam.count((b1 & ~bit(x)) | bit(y))) found = true;
            });
            if (!found) exchange = false;
          });
          if (!exchange) break;
        }
        if (!exchange) break;
      }
      if (!exchange) continue;
      out.push_back(Matroid::from_rank_fn(g, [&](Mask x) {
        int best = 0;
        for (Mask bset : fam) best = std::max(best, popcount(x & bset));
        return best;
      }));
    }
  }
  return out;
}

// All ways of grouping the given blocks into nonempty classes (set
// partitions over the block list; each class is the union of its blocks).
void for_each_grouping(const std::vector<Mask>& blocks,
                       const std::function<void(const std::vector<Mask>&)>& f) {
  std::vector<Mask> classes;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == blocks.size()) {
      f(classes);
      return;
    }
    // Indexed: the recursion grows the vector, so references would dangle.
    for (size_t c = 0; c < classes.size(); ++c) {
      classes[c] |= blocks[i];
      self(self, i + 1);
      classes[c] &= ~blocks[i];
    }
    classes.push_back(blocks[i]);
    self(self, i + 1);
    classes.pop_back();
  };
  rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Union-based construction
// ---------------------------------------------------------------------------

CheckReport check_semidirect_union(const CheckParams& p) {
  CheckReport rep = fresh("check_semidirect_union", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    const bool degenerate = gen.rng().chance(1, 8);
    Matroid mplus = degenerate
                        ? direct_sum(m, loops_on(t_labels(nt)))
                        : gen.rank_preserving_extension(m, t_labels(nt));
    Matroid k = matroid_union(mplus, add_loops(n, s_labels(ns)));
    const Mask sm = low_bits(ns);
    const Mask tm = low_bits(nt) << ns;
    const bool ok = mplus.rank() == m.rank() &&
                    equals(minor(mplus, tm, 0), m) &&
                    equals(minor(k, tm, 0), m) && equals(minor(k, 0, sm), n) &&
                    k.rank() == m.rank() + n.rank() &&
                    (!degenerate || equals(k, direct_sum(m, n)));
    if (!ok) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"M_plus", jm(mplus)},
                         {"K", jm(k)}, {"degenerate", degenerate}};
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_semidirect_intersection(const CheckParams& p) {
  CheckReport rep = fresh("check_semidirect_intersection", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    Matroid m1 = direct_sum(m, free_matroid(t_labels(nt)));
    // A coextension of N to S u T whose rank exceeds r(N) by |S|: the dual
    // of a rank-preserving extension of N*.
    Matroid nprime = reordered(
        dual(gen.rank_preserving_extension(dual(n), s_labels(ns))),
        m1.ground().labels());
    const Mask sm = low_bits(ns);
    const Mask tm = low_bits(nt) << ns;
    Matroid k = matroid_intersection(m1, nprime);
    const bool ok = nprime.rank() == n.rank() + ns &&
                    equals(minor(nprime, 0, sm), n) &&
                    equals(minor(k, tm, 0), m) && equals(minor(k, 0, sm), n) &&
                    k.rank() == m.rank() + n.rank();
    if (!ok) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"N_prime", jm(nprime)},
                         {"K", jm(k)}};
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_rank_additivity_and_dual(const CheckParams& p) {
  CheckReport rep = fresh("check_rank_additivity_and_dual", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    const int route = gen.rng().below(3);
    Matroid k = [&] {
      switch (route) {
        case 0:
          return matroid_union(gen.rank_preserving_extension(m, t_labels(nt)),
                               add_loops(n, s_labels(ns)));
        case 1:
          return principal_sum(m, n, gen.rng().submask(m.full()),
                               gen.rng().submask(n.full()));
        default:
          return higgs_semidirect(m, gen.quotient_of(m), n, gen.lift_of(n));
      }
    }();
    const Mask sm = low_bits(ns);
    const Mask tm = low_bits(nt) << ns;
    Matroid kd = dual(k);
    const bool ok = equals(minor(k, tm, 0), m) && equals(minor(k, 0, sm), n) &&
                    k.rank() == m.rank() + n.rank() &&
                    // The dual is a semidirect sum the other way around:
                    // restrict to T, contract T.
                    equals(minor(kd, sm, 0), dual(n)) &&
                    equals(minor(kd, 0, tm), dual(m));
    if (!ok) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"K", jm(k)},
                         {"route", route}};
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_union_quotients(const CheckParams& p) {
  CheckReport rep = fresh("check_union_quotients", p);
  InstanceGen gen(rep.seed);
  const int cap = std::min(8, p.max_ns + p.max_nt);  // union cost grows as 3^n
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int n = gen.rng().range(1, cap);
    Matroid g = gen.matroid(s_labels(n));
    Matroid h = gen.matroid(s_labels(n));
    Matroid u = matroid_union(g, h);
    auto bad = [&](const char* what, json detail) {
      rep.pass = false;
      rep.witness = json{{"G", jm(g)}, {"H", jm(h)}, {"failed", what},
                         {"detail", std::move(detail)}};
    };
    if (!is_quotient(g, u) || !is_quotient(h, u)) {
      bad("factors are quotients of the union", json());
    } else {
      std::unordered_set<Mask> uflats;
      for (Mask f : flats(u)) uflats.insert(f);
      for (Mask fg : flats(g)) {
        for (Mask fh : flats(h)) {
          if (!uflats.count(fg) || !uflats.count(fh) ||
              !uflats.count(fg & fh)) {
            bad("flats and their intersections carry over",
                json{{"G_flat", jset(g.ground(), fg)},
                     {"H_flat", jset(h.ground(), fh)}});
            break;
          }
        }
        if (!rep.pass) break;
      }
      if (rep.pass) {
        for (Mask x = 0; x <= u.full() && rep.pass; ++x) {
          if (is_cyclic(u, x) && !(is_cyclic(g, x) && is_cyclic(h, x)))
            bad("cyclic sets of the union are cyclic in both factors",
                json{{"set", jset(u.ground(), x)}});
        }
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_union_minors(const CheckParams& p) {
  CheckReport rep = fresh("check_union_minors", p);
  InstanceGen gen(rep.seed);
  const int cap = std::min(8, p.max_ns + p.max_nt);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int n = gen.rng().range(1, cap);
    Matroid g = gen.matroid(s_labels(n));
    Matroid h = gen.matroid(s_labels(n));
    // Plant loops so the contraction branch is not vacuous.
    if (gen.rng().chance(1, 2)) g = delete_keep_loops(g, gen.rng().submask(g.full()));
    if (gen.rng().chance(1, 2)) h = delete_keep_loops(h, gen.rng().submask(h.full()));
    Matroid u = matroid_union(g, h);
    for (int rept = 0; rept < 3 && rep.pass; ++rept) {
      const Mask x = gen.rng().submask(g.full());
      if (!equals(minor(u, x, 0),
                  matroid_union(minor(g, x, 0), minor(h, x, 0)))) {
        rep.pass = false;
        rep.witness = json{{"G", jm(g)}, {"H", jm(h)}, {"op", "delete"},
                           {"X", jset(g.ground(), x)}};
      }
    }
    for (int rept = 0; rept < 3 && rep.pass; ++rept) {
      const Mask x = gen.rng().submask(loops(g) | loops(h));
      if (!equals(minor(u, 0, x),
                  matroid_union(minor(g, 0, x), minor(h, 0, x)))) {
        rep.pass = false;
        rep.witness = json{{"G", jm(g)}, {"H", jm(h)}, {"op", "contract"},
                           {"X", jset(g.ground(), x)}};
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_union_weak_monotone(const CheckParams& p) {
  CheckReport rep = fresh("check_union_weak_monotone", p);
  InstanceGen gen(rep.seed);
  const int cap = std::min(8, p.max_ns + p.max_nt);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    // Monotonicity: chains built by truncation stay ordered under union.
    const int n = gen.rng().range(1, cap);
    Matroid g2 = gen.matroid(s_labels(n));
    Matroid h2 = gen.matroid(s_labels(n));
    Matroid g1 = truncation(g2, gen.rng().range(0, g2.rank()));
    Matroid g = truncation(g2, gen.rng().range(g1.rank(), g2.rank()));
    Matroid h1 = truncation(h2, gen.rng().range(0, h2.rank()));
    Matroid h = truncation(h2, gen.rng().range(h1.rank(), h2.rank()));
    Matroid u11 = matroid_union(g1, h1);
    Matroid u22 = matroid_union(g2, h2);
    if (!weak_leq(u11, u22)) {
      rep.pass = false;
      rep.witness = json{{"G1", jm(g1)}, {"H1", jm(h1)}, {"G2", jm(g2)},
                         {"H2", jm(h2)}, {"failed", "monotone"}};
    } else if (equals(u11, u22) && !equals(matroid_union(g, h), u11)) {
      // Squeeze: agreeing ends pin every sandwiched union.
      rep.pass = false;
      rep.witness = json{{"G1", jm(g1)}, {"G", jm(g)}, {"G2", jm(g2)},
                         {"H1", jm(h1)}, {"H", jm(h)}, {"H2", jm(h2)},
                         {"failed", "squeeze"}};
    }
    if (!rep.pass) break;
    // Principal sums grow with their defining pair.
    SumInstance s = draw_sum(gen, p);
    const Mask a2 = s.a | gen.rng().submask(s.m.full());
    const Mask b2 = s.b | gen.rng().submask(s.n.full());
    if (!weak_leq(s.p, principal_sum(s.m, s.n, a2, b2))) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["failed"] = "pair monotone";
      rep.witness["A2"] = jset(s.m.ground(), a2);
      rep.witness["B2"] = jset(s.n.ground(), b2);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_union_circuit_extension(const CheckParams& p) {
  CheckReport rep = fresh("check_union_circuit_extension", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    Matroid mplus = gen.rank_preserving_extension(m, t_labels(nt));
    Matroid k = matroid_union(mplus, add_loops(n, s_labels(ns)));
    const Mask sfull = low_bits(ns);
    std::vector<Mask> mbases = bases(m);
    for (Mask c : circuits(n)) {
      if (!rep.pass) break;
      const Mask cs = c << ns;  // the circuit inside the combined ground
      // Every way the circuit closes up over a basis of the first factor.
      std::unordered_set<Mask> closers;
      for (Mask bas : mbases) {
        Mask i = 0;
        for_each_bit(cs, [&](int e) {
          i |= fundamental_circuit(mplus, bas, e) & ~bit(e);
        });
        closers.insert(i);
      }
      for (Mask i = 0; i <= sfull && rep.pass; ++i) {
        if (!is_independent(m, i)) continue;
        bool attach = false;
        for_each_bit(cs, [&](int e) {
          if (is_independent(mplus, i | bit(e))) attach = true;
        });
        if (is_independent(k, i | cs) != attach) {
          rep.pass = false;
          rep.witness = json{{"M_plus", jm(mplus)}, {"N", jm(n)},
                             {"I", jset(m.ground(), i)},
                             {"C", jset(k.ground(), cs)},
                             {"failed", "independence"}};
        } else if (is_circuit(k, i | cs) != bool(closers.count(i))) {
          rep.pass = false;
          rep.witness = json{{"M_plus", jm(mplus)}, {"N", jm(n)},
                             {"I", jset(m.ground(), i)},
                             {"C", jset(k.ground(), cs)},
                             {"failed", "circuit"}};
        }
      }
    }
    ++rep.instances;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Principal sums
// ---------------------------------------------------------------------------

CheckReport check_principal_rank(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_rank", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    if (gen.rng().chance(1, 8)) {  // exercise the free-product corner
      s.a = s.m.full();
      s.b = s.n.full();
      s.p = free_product(s.m, s.n);
    }
    Matroid viaUnion =
        matroid_union(extension_on_flat(s.m, s.a, t_labels(s.nt), s.b),
                      add_loops(s.n, s_labels(s.ns)));
    Matroid viaHiggs = higgs_semidirect(s.m, contract_keep_loops(s.m, s.a),
                                        s.n, delete_keep_coloops(s.n, s.b));
    Matroid viaFormula = principal_sum(s.m, s.n, s.a, s.b);
    if (!equals(viaFormula, viaUnion) || !equals(viaFormula, viaHiggs) ||
        !equals(viaFormula, s.p)) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["union_route"] = jm(viaUnion);
      rep.witness["higgs_route"] = jm(viaHiggs);
      rep.witness["formula_route"] = jm(viaFormula);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_independents(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_independents", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const Mask sfull = s.m.full();
    for (Mask w = 0; w <= s.p.full() && rep.pass; ++w) {
      const Mask x = w & sfull;
      const Mask y = w >> s.ns;
      bool decomposes = false;
      if (is_independent(s.m, x)) {
        const int room = s.m.rank(x | s.a) - popcount(x);
        const Mask yb = y & s.b;
        for (Mask d2 = yb;; d2 = (d2 - 1) & yb) {
          if (popcount(d2) <= room && is_independent(s.n, y & ~d2)) {
            decomposes = true;
            break;
          }
          if (d2 == 0) break;
        }
      }
      if (decomposes != is_independent(s.p, w)) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["W"] = jset(s.p.ground(), w);
        rep.witness["decomposes"] = decomposes;
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_region_ideal_filter(const CheckParams& p) {
  CheckReport rep = fresh("check_region_ideal_filter", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const int nall = s.ns + s.nt;
    const Mask sfull = s.m.full();
    std::vector<RegionClass> cls(size_t(1) << nall);
    for (Mask w = 0; w < cls.size(); ++w)
      cls[w] = classify_region(s.m, s.n, s.a, s.b, w & sfull, w >> s.ns);
    for (Mask w = 0; w < cls.size() && rep.pass; ++w) {
      if (subset_of(s.a, w & sfull) && cls[w] == RegionClass::Greater) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["W"] = jset(s.p.ground(), w);
        rep.witness["failed"] = "first term wins once A is inside";
      }
      for (int e = 0; e < nall && rep.pass; ++e) {
        if (contains(w, e)) continue;
        const RegionClass up = cls[w | bit(e)];
        const bool strictUp = cls[w] != RegionClass::Less || up == RegionClass::Less;
        const bool laxUp = cls[w] == RegionClass::Greater || up != RegionClass::Greater;
        if (!strictUp || !laxUp) {
          rep.pass = false;
          rep.witness = jsum(s);
          rep.witness["W"] = jset(s.p.ground(), w);
          rep.witness["e"] = s.p.ground().labels_of(bit(e)).front();
          rep.witness["failed"] = "upward closure";
        }
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_dual(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_dual", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    Matroid mirrored = principal_sum(dual(s.n), dual(s.m), s.b, s.a);
    if (!equals(dual(s.p), reordered(mirrored, s.p.ground().labels()))) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["mirrored"] = jm(mirrored);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_minors(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_minors", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const Mask sfull = s.m.full(), tfull = s.n.full();
    const Mask a0 = greedy_basis(s.m, s.a);
    const Mask b0 = greedy_basis(dual(s.n), s.b);
    for (int rept = 0; rept < 4 && rep.pass; ++rept) {
      const bool del = rept % 2 == 0;
      // Deleting inside a spanning part of A (or contracting one of B's
      // cospanning elements) may leave the principal-sum family, so stay
      // clear of a basis of M|A (of N*|B respectively).
      const Mask scope = del ? ((sfull & ~a0) | (tfull << s.ns))
                             : (sfull | ((tfull & ~b0) << s.ns));
      const Mask x = gen.rng().submask(scope);
      const Mask xs = x & sfull, xt = x >> s.ns;
      Matroid mm = del ? minor(s.m, xs, 0) : minor(s.m, 0, xs);
      Matroid nm = del ? minor(s.n, xt, 0) : minor(s.n, 0, xt);
      Matroid lhs = del ? minor(s.p, x, 0) : minor(s.p, 0, x);
      Matroid rhs = principal_sum(
          mm, nm, translate_mask(s.m.ground(), s.a & ~xs, mm.ground()),
          translate_mask(s.n.ground(), s.b & ~xt, nm.ground()));
      if (!equals(lhs, rhs)) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["op"] = del ? "delete" : "contract";
        rep.witness["X"] = jset(s.p.ground(), x);
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_closure_flats(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_closure_flats", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const Mask sfull = s.m.full(), tfull = s.n.full();
    Matroid ndel = minor(s.n, s.b, 0);
    auto toDel = [&](Mask y) {
      return translate_mask(s.n.ground(), y, ndel.ground());
    };
    auto fromDel = [&](Mask y) {
      return translate_mask(ndel.ground(), y, s.n.ground());
    };
    for (Mask w = 0; w <= s.p.full() && rep.pass; ++w) {
      const Mask x = w & sfull, y = w >> s.ns;
      Mask predicted;
      if (classify_region(s.m, s.n, s.a, s.b, x, y) != RegionClass::Greater) {
        predicted = closure(s.m, x | s.a) | (closure(s.n, y) << s.ns);
      } else {
        const Mask clOutside = fromDel(closure(ndel, toDel(y & ~s.b)));
        predicted = closure(s.m, x) | ((clOutside | (y & s.b)) << s.ns);
      }
      if (closure(s.p, w) != predicted) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["W"] = jset(s.p.ground(), w);
        rep.witness["predicted"] = jset(s.p.ground(), predicted);
        rep.witness["actual"] = jset(s.p.ground(), closure(s.p, w));
      }
    }
    if (!rep.pass) break;
    // The flat family, assembled from the two closure branches.
    std::set<Mask> predictedFlats;
    std::unordered_set<Mask> delFlats;
    for (Mask f : flats(ndel)) delFlats.insert(f);
    for (Mask fm : flats(s.m)) {
      if (subset_of(s.a, fm))
        for (Mask fn : flats(s.n)) predictedFlats.insert(fm | (fn << s.ns));
      for (Mask y = 0;; ++y) {
        if (delFlats.count(toDel(y & ~s.b)) &&
            classify_region(s.m, s.n, s.a, s.b, fm, y) == RegionClass::Greater)
          predictedFlats.insert(fm | (y << s.ns));
        if (y == tfull) break;
      }
    }
    std::vector<Mask> actual = flats(s.p);
    if (std::set<Mask>(actual.begin(), actual.end()) != predictedFlats) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["predicted_flats"] =
          io::family_to_json(s.p.ground(),
                             {predictedFlats.begin(), predictedFlats.end()});
      rep.witness["actual_flats"] = io::family_to_json(s.p.ground(), actual);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_cyclic_flats(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_cyclic_flats", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    std::vector<Mask> zm = cyclic_flats(s.m);
    std::vector<Mask> zn = cyclic_flats(s.n);
    const bool anchored = gen.rng().chance(1, 3);
    if (anchored) {
      // Anchored draw: A a cyclic flat of M, B a cyclic flat of N*.
      std::vector<Mask> zdual = cyclic_flats(dual(s.n));
      s.a = zm[size_t(gen.rng().below(int(zm.size())))];
      s.b = zdual[size_t(gen.rng().below(int(zdual.size())))];
      s.p = principal_sum(s.m, s.n, s.a, s.b);
    }
    Matroid ndel = minor(s.n, s.b, 0);
    std::set<Mask> predicted;
    for (Mask z : cyclic_flats(ndel)) {
      const Mask zt = translate_mask(ndel.ground(), z, s.n.ground());
      for (Mask x : zm)
        if (!subset_of(s.a, x)) predicted.insert(x | (zt << s.ns));
    }
    for (Mask fm : flats(s.m)) {
      if (!subset_of(s.a, fm)) continue;
      if ((restriction_coloops(s.m, fm) & ~s.a) != 0) continue;
      for (Mask y : zn)
        if (y & s.b) predicted.insert(fm | (y << s.ns));
    }
    for (Mask x : zm) {
      if (!subset_of(s.a, x)) continue;
      for (Mask y : zn)
        if (!(y & s.b)) predicted.insert(x | (y << s.ns));
    }
    std::vector<Mask> actual = cyclic_flats(s.p);
    std::set<Mask> actualSet(actual.begin(), actual.end());
    if (actualSet != predicted) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["predicted"] = io::family_to_json(
          s.p.ground(), {predicted.begin(), predicted.end()});
      rep.witness["actual"] = io::family_to_json(s.p.ground(), actual);
      break;
    }
    // Unions and intersections of cyclic flats rank as in the direct sum.
    const Mask sfull = s.m.full();
    for (Mask z1 : actual) {
      for (Mask z2 : actual) {
        for (Mask w : {Mask(z1 | z2), Mask(z1 & z2)}) {
          const int split = s.m.rank(w & sfull) + s.n.rank(w >> s.ns);
          if (s.p.rank(w) != split) {
            rep.pass = false;
            rep.witness = jsum(s);
            rep.witness["Z1"] = jset(s.p.ground(), z1);
            rep.witness["Z2"] = jset(s.p.ground(), z2);
            rep.witness["failed"] = "direct sum rank on the lattice";
          }
        }
      }
    }
    if (anchored && rep.pass) {
      // With both anchors cyclic the family collapses to a product.
      std::set<Mask> simple;
      for (Mask x : zm)
        for (Mask y : zn)
          if (subset_of(s.a, x) || !(y & s.b)) simple.insert(x | (y << s.ns));
      if (simple != actualSet) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["failed"] = "anchored product form";
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_circuits(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_circuits", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const Mask sfull = s.m.full(), tfull = s.n.full();
    std::set<Mask> predicted;
    for (Mask c : circuits(s.m)) predicted.insert(c);
    for (Mask c : circuits(s.n))
      if (!(c & s.b)) predicted.insert(c << s.ns);
    for (Mask x = 0; x <= sfull; ++x) {
      if (!is_independent(s.m, x)) continue;
      if (restriction_coloops(s.m, x | s.a) & (x & ~s.a)) continue;
      const int mpart = s.m.rank(x | s.a);
      for (Mask y = 0; y <= tfull; ++y) {
        if (!is_cyclic(s.n, y) || !is_independent(s.n, y & ~s.b)) continue;
        if (popcount(x) + popcount(y) - 1 == mpart + s.n.rank(y))
          predicted.insert(x | (y << s.ns));
      }
    }
    std::vector<Mask> actual = circuits(s.p);
    if (std::set<Mask>(actual.begin(), actual.end()) != predicted) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["predicted"] = io::family_to_json(
          s.p.ground(), {predicted.begin(), predicted.end()});
      rep.witness["actual"] = io::family_to_json(s.p.ground(), actual);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_principal_cyclic_sets(const CheckParams& p) {
  CheckReport rep = fresh("check_principal_cyclic_sets", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    const Mask sfull = s.m.full();
    for (Mask w = 0; w <= s.p.full() && rep.pass; ++w) {
      const Mask x = w & sfull, y = w >> s.ns;
      const bool plain = is_cyclic(s.m, x) && is_cyclic(s.n, y) && !(y & s.b);
      const bool viaA =
          !(restriction_coloops(s.m, x | s.a) & ~s.a) && is_cyclic(s.n, y) &&
          classify_region(s.m, s.n, s.a, s.b, x, y) == RegionClass::Less;
      if ((plain || viaA) != is_cyclic(s.p, w)) {
        rep.pass = false;
        rep.witness = jsum(s);
        rep.witness["W"] = jset(s.p.ground(), w);
        rep.witness["predicted"] = plain || viaA;
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_dirsum_criterion(const CheckParams& p) {
  CheckReport rep = fresh("check_dirsum_criterion", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    if (gen.rng().chance(1, 3)) {
      // Bias towards the degenerate side of the equivalence.
      if (gen.rng().chance(1, 2)) {
        s.m = delete_keep_loops(s.m, gen.rng().submask(s.m.full()));
        s.a = gen.rng().submask(loops(s.m) | gen.rng().submask(s.m.full()));
      } else {
        s.b = gen.rng().submask(coloops(s.n));
      }
      s.p = principal_sum(s.m, s.n, s.a, s.b);
    }
    const Mask tmask = low_bits(s.nt) << s.ns;
    const bool separated =
        s.p.rank(tmask) + s.p.rank(s.m.full()) == s.p.rank();
    const bool isDirect = equals(s.p, direct_sum(s.m, s.n));
    const bool degenerate =
        subset_of(s.a, loops(s.m)) || subset_of(s.b, coloops(s.n));
    if (separated != isDirect || isDirect != degenerate) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["separated"] = separated;
      rep.witness["direct_sum"] = isDirect;
      rep.witness["degenerate_pair"] = degenerate;
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_connectivity(const CheckParams& p) {
  CheckReport rep = fresh("check_connectivity", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    if (s.ns >= 2 && gen.rng().chance(1, 3)) {
      // Plant a disconnection inside the first factor.
      auto sl = s_labels(s.ns);
      const int k = gen.rng().range(1, s.ns - 1);
      s.m = direct_sum(
          gen.matroid({sl.begin(), sl.begin() + k}),
          gen.matroid({sl.begin() + k, sl.end()}));
      s.a = gen.rng().submask(s.m.full());
      s.p = principal_sum(s.m, s.n, s.a, s.b);
    }
    bool hasAnchoredSeparator = false;
    if (s.a) {
      for (Mask x : separators(s.m))
        if (x != s.m.full() && subset_of(s.a, x)) hasAnchoredSeparator = true;
    }
    bool hasAvoidingSeparator = false;
    if (s.b) {
      for (Mask y : separators(s.n))
        if (y != 0 && !(y & s.b)) hasAvoidingSeparator = true;
    }
    const bool predictedDisconnected =
        equals(s.p, direct_sum(s.m, s.n)) || loops(s.m) != 0 ||
        coloops(s.n) != 0 || hasAnchoredSeparator || hasAvoidingSeparator;
    if (predictedDisconnected == is_connected(s.p)) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["predicted_disconnected"] = predictedDisconnected;
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_equality_criterion(const CheckParams& p) {
  CheckReport rep = fresh("check_equality_criterion", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    // All anchor pairs are enumerated, so the grounds stay small.
    const int ns = gen.rng().range(1, std::min(4, p.max_ns));
    const int nt = gen.rng().range(1, std::min(4, p.max_nt));
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    Matroid nd = dual(n);
    const std::vector<std::uint8_t> direct = psum_table(m, n, 0, 0);
    // Tie the fast table to the real construction once per instance.
    {
      const Mask a = gen.rng().submask(m.full());
      const Mask b = gen.rng().submask(n.full());
      if (principal_sum(m, n, a, b).table() != psum_table(m, n, a, b)) {
        rep.pass = false;
        rep.witness = json{{"M", jm(m)}, {"N", jm(n)},
                           {"failed", "table shortcut"}};
        break;
      }
    }
    using Signature = std::pair<Mask, Mask>;
    std::map<Signature, std::vector<std::uint8_t>> bySignature;
    std::map<std::vector<std::uint8_t>, std::set<Signature>> byTable;
    for (Mask a = 0; a <= m.full() && rep.pass; ++a) {
      for (Mask b = 0; b <= n.full(); ++b) {
        const Signature sig{closure(m, a), closure(nd, b)};
        auto table = psum_table(m, n, a, b);
        auto [at, inserted] = bySignature.try_emplace(sig, table);
        if (!inserted && at->second != table) {
          // Same closures must give the same sum.
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)},
                             {"A", jset(m.ground(), a)},
                             {"B", jset(n.ground(), b)},
                             {"failed", "closure pair does not determine sum"}};
          break;
        }
        byTable[std::move(table)].insert(sig);
      }
    }
    if (rep.pass) {
      for (auto& [table, sigs] : byTable) {
        if (table != direct && sigs.size() > 1) {
          // Away from the direct sum, equal sums force equal closures.
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)},
                             {"failed", "equal sums with distinct closures"}};
          break;
        }
      }
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_union_freedom(const CheckParams& p) {
  CheckReport rep = fresh("check_union_freedom", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    SumInstance s = draw_sum(gen, p);
    Matroid nd = dual(s.n);
    const Mask bcl = closure(nd, s.b);
    const Mask b0 = greedy_basis(nd, bcl);
    Matroid n0 = add_loops(s.n, s_labels(s.ns));
    auto tl = t_labels(s.nt);
    Matroid lower = extension_on_flat(s.m, s.a, tl, b0);
    Matroid upper = extension_on_flat(s.m, s.a, tl, bcl);
    const Mask mid = b0 | gen.rng().submask(bcl & ~b0);
    Matroid between = extension_on_flat(s.m, s.a, tl, mid);
    Matroid cand = gen.rank_preserving_extension(s.m, tl);
    bool ok = equals(matroid_union(lower, n0), s.p) &&
              equals(matroid_union(upper, n0), s.p) &&
              equals(matroid_union(between, n0), s.p);
    if (ok && weak_leq(lower, cand) && weak_leq(cand, upper))
      ok = equals(matroid_union(cand, n0), s.p);
    if (!ok) {
      rep.pass = false;
      rep.witness = jsum(s);
      rep.witness["B0"] = jset(s.n.ground(), b0);
      rep.witness["B_closure"] = jset(s.n.ground(), bcl);
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_associativity(const CheckParams& p) {
  CheckReport rep = fresh("check_associativity", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, std::min(3, p.max_ns));
    const int nt = gen.rng().range(1, std::min(3, p.max_nt));
    const int nu = gen.rng().range(1, 3);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    Matroid k = gen.matroid(u_labels(nu));
    const Mask a = gen.rng().submask(m.full());
    const Mask b = gen.rng().submask(n.full());
    const Mask c = gen.rng().submask(k.full());
    Matroid lhs =
        principal_sum(principal_sum(m, n, a, b), k, a | (b << ns), c);
    Matroid rhs =
        principal_sum(m, principal_sum(n, k, b, c), a, b | (c << nt));
    if (!equals(lhs, rhs)) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"K", jm(k)},
                         {"A", jset(m.ground(), a)},
                         {"B", jset(n.ground(), b)},
                         {"C", jset(k.ground(), c)}};
    }
    ++rep.instances;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Ladder construction
// ---------------------------------------------------------------------------

CheckReport check_higgs(const CheckParams& p) {
  CheckReport rep = fresh("check_higgs", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int n = gen.rng().range(1, std::min(6, p.max_ns + p.max_nt));
    auto [q, l] = gen.quotient_pair(s_labels(n));
    const int span = l.rank() - q.rank();
    auto fail = [&](const char* what, int i) {
      rep.pass = false;
      rep.witness = json{{"Q", jm(q)}, {"L", jm(l)}, {"i", i},
                         {"failed", what}};
    };
    for (int i = -1; i <= span + 1 && rep.pass; ++i) {
      Matroid h = higgs_lift(q, l, i);
      const int ci = std::clamp(i, 0, span);
      if (h.rank() != q.rank() + ci) {
        fail("rank", i);
        break;
      }
      for (Mask w = 0; w <= h.full(); ++w) {
        if (h.rank(w) != std::min(q.rank(w) + ci, l.rank(w))) {
          fail("pointwise minimum", i);
          break;
        }
      }
      if (!rep.pass) break;
      if (!equals(dual(h), higgs_lift(dual(l), dual(q), span - ci))) {
        fail("dual ladder", i);
        break;
      }
      for (int rept = 0; rept < 2 && rep.pass; ++rept) {
        const Mask w = gen.rng().submask(l.full());
        Matroid qr = minor(q, ~w & q.full(), 0);
        Matroid lr = minor(l, ~w & l.full(), 0);
        if (!is_quotient(qr, lr) ||
            !equals(minor(h, ~w & h.full(), 0), higgs_lift(qr, lr, i))) {
          fail("restriction", i);
          break;
        }
        Matroid qc = minor(q, 0, w);
        Matroid lc = minor(l, 0, w);
        const int drop = l.rank(w) - q.rank(w);
        if (!equals(minor(h, 0, w), higgs_lift(qc, lc, i - drop)))
          fail("contraction", i);
      }
    }
    if (!rep.pass) break;
    // The two-factor form: a quotient move on one side and a lift on the
    // other assemble a matroid restricting/contracting to the factors.
    const int ns = gen.rng().range(1, std::min(3, p.max_ns));
    const int nt = gen.rng().range(1, std::min(3, p.max_nt));
    Matroid m = gen.matroid(s_labels(ns));
    Matroid nn = gen.matroid(t_labels(nt));
    Matroid mq = gen.quotient_of(m);
    Matroid nl = gen.lift_of(nn);
    if (!is_quotient(direct_sum(mq, nn), direct_sum(m, nl))) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"M_q", jm(mq)}, {"N", jm(nn)},
                         {"N_l", jm(nl)}, {"failed", "sum pair is a quotient pair"}};
      break;
    }
    Matroid k = higgs_semidirect(m, mq, nn, nl);
    const Mask sm = low_bits(ns);
    const Mask tm = low_bits(nt) << ns;
    if (!equals(minor(k, tm, 0), m) || !equals(minor(k, 0, sm), nn) ||
        k.rank() != m.rank() + nn.rank()) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"M_q", jm(mq)}, {"N", jm(nn)},
                         {"N_l", jm(nl)}, {"failed", "two-factor form"}};
      break;
    }
    // Principal sums ride the same ladder at height r_M(A).
    const Mask a = gen.rng().submask(m.full());
    const Mask b = gen.rng().submask(nn.full());
    Matroid ladder = higgs_lift(
        direct_sum(contract_keep_loops(m, a), nn),
        direct_sum(m, delete_keep_coloops(nn, b)), m.rank(a));
    if (!equals(principal_sum(m, nn, a, b), ladder)) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(nn)},
                         {"A", jset(m.ground(), a)},
                         {"B", jset(nn.ground(), b)},
                         {"failed", "principal sum as a ladder step"}};
      break;
    }
    ++rep.instances;
  }
  return rep;
}

CheckReport check_weak_interval(const CheckParams& p) {
  CheckReport rep = fresh("check_weak_interval", p);
  InstanceGen gen(rep.seed);
  // Exhaustive converse on two small fixtures: the matroids between the
  // direct sum and the free product in the weak order are exactly the ones
  // restricting to M and contracting to N.
  struct Fixture {
    Matroid m, n;
  };
  const Fixture fixtures[] = {
      {uniform(1, s_labels(2)), uniform(1, t_labels(2))},
      {uniform(2, s_labels(3)), uniform(1, t_labels(2))},
  };
  for (const Fixture& fx : fixtures) {
    Matroid dsum = direct_sum(fx.m, fx.n);
    Matroid fp = free_product(fx.m, fx.n);
    const int ns = fx.m.size();
    const Mask sm = low_bits(ns);
    const Mask tm = low_bits(fx.n.size()) << ns;
    for (const Matroid& k : all_matroids_on(dsum.ground())) {
      const bool inside = weak_leq(dsum, k) && weak_leq(k, fp);
      const bool splits =
          equals(minor(k, tm, 0), fx.m) && equals(minor(k, 0, sm), fx.n);
      if (inside != splits) {
        rep.pass = false;
        rep.witness = json{{"M", jm(fx.m)}, {"N", jm(fx.n)}, {"K", jm(k)},
                           {"inside_interval", inside}};
        return rep;
      }
      ++rep.instances;
    }
  }
  // Forward direction on generated instances, over all three routes.
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    Matroid m = gen.matroid(s_labels(ns));
    Matroid n = gen.matroid(t_labels(nt));
    const int route = gen.rng().below(3);
    Matroid k = [&] {
      switch (route) {
        case 0:
          return matroid_union(gen.rank_preserving_extension(m, t_labels(nt)),
                               add_loops(n, s_labels(ns)));
        case 1:
          return principal_sum(m, n, gen.rng().submask(m.full()),
                               gen.rng().submask(n.full()));
        default:
          return higgs_semidirect(m, gen.quotient_of(m), n, gen.lift_of(n));
      }
    }();
    if (!weak_leq(direct_sum(m, n), k) || !weak_leq(k, free_product(m, n))) {
      rep.pass = false;
      rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"K", jm(k)},
                         {"route", route}};
    }
    ++rep.instances;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Transversal transfer
// ---------------------------------------------------------------------------

CheckReport check_transversal_transfer(const CheckParams& p) {
  CheckReport rep = fresh("check_transversal_transfer", p);
  InstanceGen gen(rep.seed);
  for (int it = 0; it < p.instances && rep.pass; ++it) {
    const int ns = gen.rng().range(1, p.max_ns);
    const int nt = gen.rng().range(1, p.max_nt);
    const int part = it % 3;
    try {
      if (part == 0) {
        // Transversal factors with a cyclic-flat anchor give a transversal sum.
        Matroid m = gen.transversal_on(s_labels(ns));
        Matroid n = gen.transversal_on(t_labels(nt));
        std::vector<Mask> zm = cyclic_flats(m);
        const Mask a = zm[size_t(gen.rng().below(int(zm.size())))];
        const Mask b = gen.rng().submask(n.full());
        Matroid sum = principal_sum(m, n, a, b);
        CheckReport verdict = is_transversal(sum);
        if (!verdict.pass) {
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)},
                             {"A", jset(m.ground(), a)},
                             {"B", jset(n.ground(), b)},
                             {"violation", verdict.witness}};
        }
      } else if (part == 1) {
        // Fundamental factors with cyclic anchors on both sides.
        Matroid m = gen.fundamental_transversal_on(s_labels(ns)).m;
        Matroid n = gen.fundamental_transversal_on(t_labels(nt)).m;
        std::vector<Mask> zm = cyclic_flats(m);
        std::vector<Mask> zd = cyclic_flats(dual(n));
        const Mask a = zm[size_t(gen.rng().below(int(zm.size())))];
        const Mask b = zd[size_t(gen.rng().below(int(zd.size())))];
        Matroid sum = principal_sum(m, n, a, b);
        CheckReport verdict = is_fundamental_transversal(sum);
        if (!verdict.pass) {
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)},
                             {"A", jset(m.ground(), a)},
                             {"B", jset(n.ground(), b)},
                             {"violation", verdict.witness}};
        }
      } else {
        // Whatever the union produces, the factors inherit its class.
        Matroid m = gen.matroid(s_labels(ns));
        Matroid n = gen.matroid(t_labels(nt));
        Matroid k =
            matroid_union(gen.rank_preserving_extension(m, t_labels(nt)),
                          add_loops(n, s_labels(ns)));
        if (is_transversal(k).pass &&
            (!is_transversal(m).pass || !is_transversal(n).pass)) {
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"K", jm(k)},
                             {"failed", "transversal descends to factors"}};
        } else if (is_fundamental_transversal(k).pass &&
                   (!is_fundamental_transversal(m).pass ||
                    !is_fundamental_transversal(n).pass)) {
          rep.pass = false;
          rep.witness = json{{"M", jm(m)}, {"N", jm(n)}, {"K", jm(k)},
                             {"failed", "fundamental descends to factors"}};
        }
      }
    } catch (const CyclicFlatCapExceeded&) {
      continue;  // oversized lattice; skip without counting
    }
    ++rep.instances;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Frozen negative examples
// ---------------------------------------------------------------------------

CheckReport check_counterexamples(const CheckParams& p) {
  CheckReport rep = fresh("check_counterexamples", p);
  auto fact = [&](bool ok, const char* what, json detail = json()) {
    if (rep.pass && !ok) {
      rep.pass = false;
      rep.witness = json{{"failed", what}, {"detail", std::move(detail)}};
    }
    ++rep.instances;
  };

  // --- a two-line sum whose dual escapes the union construction ----------
  {
    Matroid m = uniform(3, {"a", "a'", "b", "b'"});
    Matroid n = uniform(1, {"c", "c'"});
    Matroid mplus = fixtures::two_lines_extension();
    Matroid k = matroid_union(mplus, add_loops(n, {"a", "a'", "b", "b'"}));
    fact(equals(minor(k, 0b110000, 0), m) && equals(minor(k, 0, 0b001111), n),
         "two-line sum splits into its factors");
    auto nonSpanning = [](const Matroid& mat) {
      std::set<Mask> out;
      for (Mask c : circuits(mat))
        if (mat.rank(c) < mat.rank()) out.insert(c);
      return out;
    };
    fact(nonSpanning(k) ==
             std::set<Mask>{0b001111, 0b110011, 0b111100},
         "two-line sum has the three expected non-spanning circuits");
    Matroid kd = dual(k);
    fact(nonSpanning(kd) == std::set<Mask>{0b000011, 0b001100, 0b110000},
         "its dual has the three expected non-spanning cocircuits");
    // Exhaustive: no union of a rank<=2 extension of the dual second factor
    // with the loop-padded dual first factor equals the dual sum.  Any
    // factor of a union is weakly below it, and the dual sum has rank 2,
    // so rank<=2 candidates cover everything; those matroids are exactly
    // loop sets plus parallel classes, ranked by how many classes are met.
    Matroid h = direct_sum(dual(m), loops_on({"c", "c'"}));
    const GroundSet& gset = kd.ground();
    int candidates = 0;
    bool hit = false;
    const Mask cc = 0b110000;
    for (Mask lambda = 0; lambda <= Mask(0b001111); ++lambda) {
      std::vector<Mask> blocks{cc};
      for_each_bit(Mask(0b001111) & ~lambda,
                   [&](int e) { blocks.push_back(bit(e)); });
      for_each_grouping(blocks, [&](const std::vector<Mask>& classes) {
        ++candidates;
        Matroid cand = Matroid::from_rank_fn(gset, [&](Mask x) {
          int met = 0;
          for (Mask cl : classes)
            if (x & cl) ++met;
          return std::min(met, 2);
        });
        if (equals(matroid_union(cand, h), kd)) hit = true;
      });
    }
    fact(candidates == 151, "the candidate enumeration is complete",
         json{{"candidates", candidates}});
    fact(!hit, "the dual sum is not a union over the mirrored factors");
  }

  // --- deleting the anchor point of the three-line sum -------------------
  {
    Matroid m = fixtures::parallel_connection_two_lines();
    Matroid n = uniform(1, {"a", "b", "c"});
    Matroid sum = principal_sum(m, n, 1, 0b111);  // anchor x, all of T
    fact(equals(sum, fixtures::three_lines_at_point()),
         "three concurrent lines arise as a principal sum");
    Matroid cut = minor(sum, 1, 0);  // drop the common point x
    Matroid mcut = minor(m, 1, 0);
    const Mask scut = low_bits(6);
    fact(cut.rank() == 4 && cut.rank(0b000000111) == 2 &&
             cut.rank(0b000111000) == 2 && cut.rank(0b111000000) == 2 &&
             cut.rank(0b000111111) == 3 && cut.rank(0b111000111) == 3 &&
             cut.rank(0b111111000) == 3,
         "the deletion is three disjoint pairwise-coplanar lines in rank 4");
    fact(equals(minor(cut, 0b111000000, 0), mcut) &&
             equals(minor(cut, 0, scut), n),
         "the deletion still splits into the cut factors");
    bool principal = false;
    for (Mask a = 0; a <= scut && !principal; ++a)
      for (Mask b = 0; b <= Mask(0b111); ++b)
        if (psum_table(mcut, n, a, b) == cut.table()) {
          principal = true;
          break;
        }
    fact(!principal, "no anchor pair reproduces the deletion");
  }

  // --- the rank-3 wheel-like sum is no ladder lift ------------------------
  {
    Matroid w = fixtures::whirl3();
    Matroid m = uniform(2, {"a", "b", "c"});
    Matroid n = uniform(1, {"d", "e", "f"});
    fact(equals(minor(w, 0b111000, 0), m) && equals(minor(w, 0, 0b000111), n),
         "the wheel-like sum splits into a line and a point");
    fact(equals(matroid_union(fixtures::whirl_union_left(),
                              add_loops(n, {"a", "b", "c"})),
                w),
         "the union construction reaches it");
    int pairs = 0;
    bool laddered = false;
    for (const Matroid& mq : all_matroids_on(m.ground())) {
      if (!is_quotient(mq, m)) continue;
      for (const Matroid& nl : all_matroids_on(n.ground())) {
        if (!is_quotient(n, nl)) continue;
        ++pairs;
        if (equals(higgs_semidirect(m, mq, n, nl), w)) laddered = true;
      }
    }
    fact(pairs > 0 && !laddered,
         "no quotient/lift pair reaches it through the ladder",
         json{{"pairs", pairs}});
  }

  // --- the free extension of three pairs is no union ----------------------
  {
    Matroid k2 = fixtures::pairs_free_extension();
    std::vector<std::string> xfirst{"x", "p1", "p2", "q1", "q2", "r1", "r2"};
    Matroid k2r = reordered(k2, xfirst);
    Matroid m = uniform(1, {"x"});
    Matroid n = minor(k2r, 0, 1);  // contract x
    fact(equals(n, fixtures::truncated_pairs()),
         "contracting the free tip leaves the truncated pairs");
    Matroid n0 = add_loops(n, {"x"});
    bool unionHit = false;
    // Rank-preserving extensions of a single point: each new element is
    // parallel to the tip or a loop.
    for (Mask extra = 0; extra <= Mask(0b1111110); extra += 2) {
      const Mask nonloops = extra | 1;
      Matroid cand = Matroid::from_rank_fn(
          k2r.ground(), [&](Mask x) { return (x & nonloops) ? 1 : 0; });
      if (equals(matroid_union(cand, n0), k2r)) unionHit = true;
    }
    fact(!unionHit, "no rank-preserving union form reaches the free extension");
    fact(equals(k2r, higgs_semidirect(m, loops_on({"x"}), n,
                                      fixtures::three_parallel_pairs())),
         "the ladder form does reach it");
  }

  // --- transversality hypotheses are sharp --------------------------------
  {
    Matroid t2 = fixtures::truncated_pairs();
    fact(!is_transversal(t2).pass, "the truncated pairs are not transversal");
    Matroid mcut = minor(t2, bit(5), 0);  // drop r2
    Matroid single = loops_on({"r2"});
    fact(is_transversal(mcut).pass && is_transversal(single).pass,
         "both factors of its sum form are transversal");
    Matroid rebuilt = principal_sum(mcut, single, bit(4), 1);  // anchor r1
    fact(equals(rebuilt, t2), "the sum reproduces the truncation");
    fact(!is_cyclic(mcut, bit(4)),
         "the anchor is not cyclic, so no hypothesis is violated");
    fixtures::FrozenSum fs = fixtures::nonfundamental_principal_sum();
    fact(is_fundamental_transversal(fs.m).pass &&
             is_fundamental_transversal(fs.n).pass,
         "frozen factors are fundamental transversal");
    fact(is_flat(fs.m, fs.a) && is_cyclic(fs.m, fs.a),
         "frozen anchor is a cyclic flat of the first factor");
    Matroid fsdual = dual(fs.n);
    fact(!(is_flat(fsdual, fs.b) && is_cyclic(fsdual, fs.b)),
         "frozen co-anchor is not a cyclic flat of the second factor's dual");
    Matroid fsum = principal_sum(fs.m, fs.n, fs.a, fs.b);
    fact(is_transversal(fsum).pass, "the frozen sum stays transversal");
    fact(!is_fundamental_transversal(fsum).pass,
         "the frozen sum is not fundamental transversal");
    Matroid k2 = fixtures::pairs_free_extension();
    fact(is_fundamental_transversal(k2).pass,
         "the free extension of three pairs is fundamental transversal");
    fact(!is_transversal(minor(k2, 0, bit(6))).pass,
         "contracting its tip destroys transversality");
  }
  return rep;
}

}  // namespace

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> reg = {
      {"check_semidirect_union", &check_semidirect_union},
      {"check_semidirect_intersection", &check_semidirect_intersection},
      {"check_rank_additivity_and_dual", &check_rank_additivity_and_dual},
      {"check_union_quotients", &check_union_quotients},
      {"check_union_minors", &check_union_minors},
      {"check_union_weak_monotone", &check_union_weak_monotone},
      {"check_union_circuit_extension", &check_union_circuit_extension},
      {"check_principal_rank", &check_principal_rank},
      {"check_principal_independents", &check_principal_independents},
      {"check_region_ideal_filter", &check_region_ideal_filter},
      {"check_principal_dual", &check_principal_dual},
      {"check_principal_minors", &check_principal_minors},
      {"check_principal_closure_flats", &check_principal_closure_flats},
      {"check_principal_cyclic_flats", &check_principal_cyclic_flats},
      {"check_principal_circuits", &check_principal_circuits},
      {"check_principal_cyclic_sets", &check_principal_cyclic_sets},
      {"check_dirsum_criterion", &check_dirsum_criterion},
      {"check_connectivity", &check_connectivity},
      {"check_equality_criterion", &check_equality_criterion},
      {"check_union_freedom", &check_union_freedom},
      {"check_associativity", &check_associativity},
      {"check_higgs", &check_higgs},
      {"check_weak_interval", &check_weak_interval},
      {"check_transversal_transfer", &check_transversal_transfer},
      {"check_counterexamples", &check_counterexamples},
  };
  return reg;
}

}  // namespace matroid::verify
