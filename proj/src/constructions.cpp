#include "matroid/constructions.hpp"

#include <algorithm>
#include <bit>

namespace matroid {

namespace {
// Anchor masks index ground positions; a stray bit would read past the end
// of the rank table.
void check_within(const Matroid& m, Mask a) {
  if (!subset_of(a, m.full()))
    throw UnknownLabel(std::countr_zero(a & ~m.full()));
}
}  // namespace

Matroid uniform(int r, std::vector<std::string> labels) {
  GroundSet g(std::move(labels));
  if (r < 0 || r > g.size())
    throw RankOutOfRange("uniform rank must be between 0 and the ground size");
  return Matroid::from_rank_fn(std::move(g), [r](Mask x) {
    return std::min(popcount(x), r);
  });
}

Matroid free_matroid(std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  return uniform(n, std::move(labels));
}

Matroid loops_on(std::vector<std::string> labels) {
  return uniform(0, std::move(labels));
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  GroundSet g = concat(m.ground(), n.ground());
  const int ns = m.size();
  const Mask smask = m.full();
  return Matroid::from_rank_fn(std::move(g), [&](Mask x) {
    return m.rank(x & smask) + n.rank(x >> ns);
  });
}

Matroid add_loops(const Matroid& n, std::vector<std::string> extra) {
  GroundSet g = concat(GroundSet(std::move(extra)), n.ground());
  const int k = g.size() - n.size();
  return Matroid::from_rank_fn(std::move(g), [&](Mask x) {
    return n.rank(x >> k);
  });
}

Matroid matroid_union(const Matroid& g, const Matroid& h) {
  if (g.ground() != h.ground()) throw GroundSetMismatch();
  return Matroid::from_rank_fn(g.ground(), [&](Mask x) {
    int best = popcount(x);  // W = 0
    for_each_submask(x, [&](Mask w) {
      const int v = g.rank(w) + h.rank(w) + popcount(x & ~w);
      if (v < best) best = v;
    });
    return best;
  });
}

Matroid matroid_intersection(const Matroid& g, const Matroid& h) {
  return dual(matroid_union(dual(g), dual(h)));
}

Matroid principal_extension(const Matroid& k, Mask a, const std::string& b) {
  check_within(k, a);
  GroundSet g = concat(k.ground(), GroundSet({b}));
  const Mask old = k.full();
  const Mask nb = bit(k.size());
  return Matroid::from_rank_fn(std::move(g), [&](Mask x) {
    if (!(x & nb)) return k.rank(x);
    const Mask y = x & old;
    return std::min(k.rank(y | a), k.rank(y) + 1);
  });
}

Matroid extension_on_flat(const Matroid& m, Mask a,
                          const std::vector<std::string>& t_labels,
                          Mask b_of_t) {
  check_within(m, a);
  if (!subset_of(b_of_t, low_bits(int(t_labels.size()))))
    throw UnknownLabel(std::countr_zero(b_of_t & ~low_bits(int(t_labels.size()))));
  GroundSet g = concat(m.ground(), GroundSet(t_labels));
  const int ns = m.size();
  const Mask smask = m.full();
  return Matroid::from_rank_fn(std::move(g), [&](Mask xy) {
    const Mask x = xy & smask;
    const Mask y = xy >> ns;
    return std::min(m.rank(x | a), m.rank(x) + popcount(y & b_of_t));
  });
}

Matroid principal_sum(const PrincipalSumSpec& s) {
  check_within(s.m, s.a);
  check_within(s.n, s.b);
  GroundSet g = concat(s.m.ground(), s.n.ground());
  const int ns = s.m.size();
  const Mask smask = s.m.full();
  const Mask a = s.a, b = s.b;
  return Matroid::from_rank_fn(std::move(g), [&](Mask xy) {
    const Mask x = xy & smask;
    const Mask y = xy >> ns;
    return std::min(s.m.rank(x | a) + s.n.rank(y),
                    s.m.rank(x) + s.n.rank(y & ~b) + popcount(y & b));
  });
}

Matroid free_product(const Matroid& m, const Matroid& n) {
  return principal_sum(PrincipalSumSpec{m, n, m.full(), n.full()});
}

Matroid truncation(const Matroid& m, int k) {
  if (k < 0 || k > m.rank())
    throw RankOutOfRange("truncation rank must be between 0 and r(M)");
  return Matroid::from_rank_fn(m.ground(), [&](Mask x) {
    return std::min(m.rank(x), k);
  });
}

Matroid free_extension(const Matroid& m, const std::string& e) {
  return principal_extension(m, m.full(), e);
}

Matroid free_coextension(const Matroid& m, const std::string& e) {
  return dual(free_extension(dual(m), e));
}

Matroid higgs_lift(const HiggsSpec& s) {
  if (!is_quotient(s.q, s.l)) throw NotAQuotient();
  const int span = s.l.rank() - s.q.rank();
  // For a quotient pair, r_Q <= r_L pointwise and r_L - r_Q <= span
  // pointwise, so the clamped indices agree with the formula at 0 and span.
  if (s.i <= 0) return s.q;
  if (s.i >= span) return s.l;
  const int i = s.i;
  return Matroid::from_rank_fn(s.q.ground(), [&](Mask x) {
    return std::min(s.q.rank(x) + i, s.l.rank(x));
  });
}

Matroid higgs_semidirect(const Matroid& m, const Matroid& m_q,
                         const Matroid& n, const Matroid& n_l) {
  if (!is_quotient(m_q, m) || !is_quotient(n, n_l)) throw NotAQuotient();
  const Matroid q = direct_sum(m_q, n);
  const Matroid l = direct_sum(m, n_l);
  return higgs_lift(HiggsSpec{q, l, m.rank() - m_q.rank()});
}

Matroid contract_keep_loops(const Matroid& m, Mask a) {
  check_within(m, a);
  const int ra = m.rank(a);
  return Matroid::from_rank_fn(m.ground(), [&](Mask x) {
    return m.rank(x | a) - ra;
  });
}

Matroid delete_keep_loops(const Matroid& m, Mask a) {
  check_within(m, a);
  return Matroid::from_rank_fn(m.ground(), [&](Mask x) {
    return m.rank(x & ~a);
  });
}

Matroid delete_keep_coloops(const Matroid& m, Mask b) {
  check_within(m, b);
  return Matroid::from_rank_fn(m.ground(), [&](Mask x) {
    return m.rank(x & ~b) + popcount(x & b);
  });
}

}  // namespace matroid
