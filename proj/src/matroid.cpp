#include "matroid/matroid.hpp"

namespace matroid {

Matroid Matroid::from_table(GroundSet g, std::vector<std::uint8_t> table) {
  validate_rank_table(g, table);
  return Matroid(std::move(g), std::move(table));
}

Matroid Matroid::from_table(GroundSet g, const std::vector<int>& table) {
  std::vector<std::uint8_t> t(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] > 255)
      throw InvalidTable("rank value out of byte range at index " + std::to_string(i));
    t[i] = static_cast<std::uint8_t>(table[i]);
  }
  return from_table(std::move(g), std::move(t));
}

Matroid Matroid::from_table_unchecked(GroundSet g, std::vector<std::uint8_t> table) {
  if (table.size() != g.subset_count())
    throw InvalidTable("rank table has wrong length");
  return Matroid(std::move(g), std::move(table));
}

void validate_rank_table(const GroundSet& g, const std::vector<std::uint8_t>& t) {
  const int n = g.size();
  if (t.size() != g.subset_count())
    throw InvalidTable("rank table must have exactly 2^n entries");
  if (t[0] != 0) throw AxiomViolation(Axiom::Normalization, 0, 0);
  const Mask full = g.full();
  for (Mask x = 0; x <= full && full; ++x) {
    if (t[x] > popcount(x)) throw AxiomViolation(Axiom::UnitBound, x, x);
    if (x == full) break;
  }
  // Monotonicity on covering pairs implies monotonicity everywhere.
  for (Mask x = 0; x <= full; ++x) {
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      if (t[x] > t[x | bit(e)]) throw AxiomViolation(Axiom::Monotonicity, x, x | bit(e));
    }
    if (x == full) break;
  }
  // Local exchange is equivalent to submodularity:
  //   r(X+e) + r(X+f) >= r(X+e+f) + r(X)  for all X and distinct e,f not in X.
  for (Mask x = 0; x <= full; ++x) {
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      for (int f = e + 1; f < n; ++f) {
        if (contains(x, f)) continue;
        const Mask xe = x | bit(e), xf = x | bit(f);
        if (t[xe] + t[xf] < t[xe | xf] + t[x])
          throw AxiomViolation(Axiom::Submodularity, xe, xf);
      }
    }
    if (x == full) break;
  }
}

std::vector<Mask> bases(const Matroid& m) {
  std::vector<Mask> out;
  const int r = m.rank();
  for (Mask x = 0; x <= m.full(); ++x) {
    if (popcount(x) == r && m.rank(x) == r) out.push_back(x);
    if (x == m.full()) break;
  }
  return out;
}

bool is_basis(const Matroid& m, Mask x) {
  return popcount(x) == m.rank() && m.rank(x) == m.rank();
}

Mask closure(const Matroid& m, Mask x) {
  Mask cl = x;
  const int r = m.rank(x);
  for (int e = 0; e < m.size(); ++e)
    if (!contains(x, e) && m.rank(x | bit(e)) == r) cl |= bit(e);
  return cl;
}

bool is_circuit(const Matroid& m, Mask x) {
  if (x == 0 || is_independent(m, x)) return false;
  bool minimal = true;
  for_each_bit(x, [&](int e) {
    if (!is_independent(m, x & ~bit(e))) minimal = false;
  });
  return minimal;
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 1; x <= m.full() && m.full(); ++x) {
    if (is_circuit(m, x)) out.push_back(x);
    if (x == m.full()) break;
  }
  return out;
}

Mask fundamental_circuit(const Matroid& m, Mask basis, int element) {
  if (!is_basis(m, basis)) throw NotABasis();
  if (contains(basis, element)) throw ElementInBasis();
  // basis+element holds exactly one circuit: the elements whose removal
  // leaves the rank unchanged.
  const Mask be = basis | bit(element);
  const int r = m.rank(be);
  Mask c = 0;
  for_each_bit(be, [&](int e) {
    if (m.rank(be & ~bit(e)) == r) c |= bit(e);
  });
  return c;
}

bool is_flat(const Matroid& m, Mask x) { return closure(m, x) == x; }

std::vector<Mask> flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.full(); ++x) {
    if (is_flat(m, x)) out.push_back(x);
    if (x == m.full()) break;
  }
  return out;
}

bool is_cyclic(const Matroid& m, Mask x) {
  const int r = m.rank(x);
  bool cyclic = true;
  for_each_bit(x, [&](int e) {
    if (m.rank(x & ~bit(e)) != r) cyclic = false;
  });
  return cyclic;
}

std::vector<Mask> cyclic_flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.full(); ++x) {
    if (is_flat(m, x) && is_cyclic(m, x)) out.push_back(x);
    if (x == m.full()) break;
  }
  return out;
}

Mask loops(const Matroid& m) {
  Mask l = 0;
  for (int e = 0; e < m.size(); ++e)
    if (m.rank(bit(e)) == 0) l |= bit(e);
  return l;
}

Mask coloops(const Matroid& m) {
  Mask c = 0;
  const int r = m.rank();
  for (int e = 0; e < m.size(); ++e)
    if (m.rank(m.full() & ~bit(e)) == r - 1) c |= bit(e);
  return c;
}

Matroid dual(const Matroid& m) {
  const Mask full = m.full();
  const int r = m.rank();
  return Matroid::from_rank_fn(m.ground(), [&](Mask x) {
    return popcount(x) - r + m.rank(full & ~x);
  });
}

Matroid minor(const Matroid& m, Mask del, Mask contracted) {
  if (del & contracted)
    throw OverlappingSets("deletion and contraction sets overlap");
  const Mask keep = m.full() & ~(del | contracted);
  std::vector<std::string> labels;
  std::vector<int> pos;  // bit position in the original ground, per new bit
  for (int e = 0; e < m.size(); ++e)
    if (contains(keep, e)) {
      labels.push_back(m.ground().label(e));
      pos.push_back(e);
    }
  const int rc = m.rank(contracted);
  return Matroid::from_rank_fn(GroundSet(std::move(labels)), [&](Mask x) {
    Mask orig = contracted;
    for_each_bit(x, [&](int i) { orig |= bit(pos[static_cast<size_t>(i)]); });
    return m.rank(orig) - rc;
  });
}

bool equals(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) throw GroundSetMismatch();
  return a.table() == b.table();
}

bool weak_leq(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) throw GroundSetMismatch();
  for (Mask x = 0; x < a.ground().subset_count(); ++x)
    if (a.rank(x) > b.rank(x)) return false;
  return true;
}

bool is_quotient(const Matroid& q, const Matroid& l) {
  if (q.ground() != l.ground()) throw GroundSetMismatch();
  for (Mask x = 0; x < q.ground().subset_count(); ++x)
    if (!subset_of(closure(l, x), closure(q, x))) return false;
  return true;
}

std::vector<Mask> separators(const Matroid& m) {
  std::vector<Mask> out;
  const int r = m.rank();
  const Mask full = m.full();
  for (Mask x = 0; x <= full; ++x) {
    if (m.rank(x) + m.rank(full & ~x) == r) out.push_back(x);
    if (x == full) break;
  }
  return out;
}

bool is_connected(const Matroid& m) {
  if (m.size() < 1) return false;
  for (const Mask s : separators(m))
    if (s != 0 && s != m.full()) return false;
  return true;
}

RegionClass classify_region(const Matroid& m, const Matroid& n, Mask a, Mask b,
                            Mask x, Mask y) {
  const int lhs = m.rank(x | a) + n.rank(y);
  const int rhs = m.rank(x) + n.rank(y & ~b) + popcount(y & b);
  if (lhs < rhs) return RegionClass::Less;
  if (lhs > rhs) return RegionClass::Greater;
  return RegionClass::Equal;
}

Matroid with_labels(const Matroid& m, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != m.size())
    throw DimensionMismatch("label list has wrong length");
  return Matroid::from_table_unchecked(GroundSet(std::move(labels)),
                                       m.table());
}

Matroid reordered(const Matroid& m, const std::vector<std::string>& order) {
  GroundSet g(order);
  if (g.size() != m.size()) throw GroundSetMismatch();
  std::vector<int> pos(order.size());  // new bit -> old bit
  for (int i = 0; i < g.size(); ++i) pos[static_cast<size_t>(i)] = m.ground().index_of(order[static_cast<size_t>(i)]);
  return Matroid::from_rank_fn(std::move(g), [&](Mask x) {
    Mask orig = 0;
    for_each_bit(x, [&](int i) { orig |= bit(pos[static_cast<size_t>(i)]); });
    return m.rank(orig);
  });
}

Mask translate_mask(const GroundSet& from, Mask m, const GroundSet& to) {
  Mask out = 0;
  for_each_bit(m, [&](int i) { out |= bit(to.index_of(from.label(i))); });
  return out;
}

}  // namespace matroid
