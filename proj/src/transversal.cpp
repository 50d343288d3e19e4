#include "matroid/transversal.hpp"

#include <algorithm>
#include <string>

namespace matroid {

namespace {

// Maximum bipartite matching (element -> containing set) restricted to the
// elements of x, by augmenting paths.
class Matcher {
 public:
  explicit Matcher(const SetSystem& sys) : sys_(sys) {
    adj_.resize(static_cast<size_t>(sys.ground.size()));
    for (size_t i = 0; i < sys.sets.size(); ++i)
      for_each_bit(sys.sets[i], [&](int e) { adj_[static_cast<size_t>(e)].push_back(static_cast<int>(i)); });
  }

  int max_matching(Mask x) {
    match_.assign(sys_.sets.size(), -1);
    int size = 0;
    for_each_bit(x, [&](int e) {
      seen_.assign(sys_.sets.size(), false);
      if (augment(e, x)) ++size;
    });
    return size;
  }

 private:
  bool augment(int e, Mask x) {
    for (int i : adj_[static_cast<size_t>(e)]) {
      if (seen_[static_cast<size_t>(i)]) continue;
      seen_[static_cast<size_t>(i)] = true;
      if (match_[static_cast<size_t>(i)] < 0 || augment(match_[static_cast<size_t>(i)], x)) {
        match_[static_cast<size_t>(i)] = e;
        return true;
      }
    }
    return false;
  }

  const SetSystem& sys_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<char> seen_;
};

}  // namespace

Matroid transversal_matroid(const SetSystem& sys) {
  Matcher matcher(sys);
  return Matroid::from_rank_fn(sys.ground,
                               [&](Mask x) { return matcher.max_matching(x); });
}

namespace {

struct MiOutcome {
  bool violated = false;   // strict reverse inequality somewhere
  bool strict = false;     // some family satisfies it strictly
  Mask family_bits = 0;    // witness family (bit i = i-th cyclic flat)
  int lhs = 0, rhs = 0;
};

// Evaluates the inclusion-exclusion inequality over every nonempty family
// of cyclic flats; stops early on a violation.
MiOutcome mason_ingleton_scan(const Matroid& m, const std::vector<Mask>& z) {
  const int k = static_cast<int>(z.size());
  const std::uint32_t fams = 1u << k;
  std::vector<Mask> uni(fams), inter(fams);
  std::vector<int> sign(fams);  // +1 for odd subfamily, -1 for even nonempty
  uni[0] = 0;
  inter[0] = m.full();
  for (std::uint32_t f = 1; f < fams; ++f) {
    const int low = std::countr_zero(f);
    uni[f] = uni[f & (f - 1)] | z[static_cast<size_t>(low)];
    inter[f] = inter[f & (f - 1)] & z[static_cast<size_t>(low)];
    sign[f] = (popcount(f) & 1) ? 1 : -1;
  }
  MiOutcome out;
  for (std::uint32_t f = 1; f < fams; ++f) {
    int rhs = 0;
    for (std::uint32_t s = f; s; s = (s - 1) & f) rhs += sign[s] * m.rank(uni[s]);
    const int lhs = m.rank(inter[f]);
    if (lhs > rhs) {
      out.violated = true;
      out.family_bits = f;
      out.lhs = lhs;
      out.rhs = rhs;
      return out;
    }
    if (lhs < rhs && !out.strict) {
      out.strict = true;
      out.family_bits = f;
      out.lhs = lhs;
      out.rhs = rhs;
    }
  }
  return out;
}

nlohmann::json family_witness(const Matroid& m, const std::vector<Mask>& z,
                              const MiOutcome& o) {
  nlohmann::json fam = nlohmann::json::array();
  for_each_bit(o.family_bits,
               [&](int i) { fam.push_back(m.ground().labels_of(z[static_cast<size_t>(i)])); });
  return nlohmann::json{{"family", fam}, {"lhs", o.lhs}, {"rhs", o.rhs}};
}

std::vector<Mask> capped_cyclic_flats(const Matroid& m, int z_cap) {
  std::vector<Mask> z = cyclic_flats(m);
  if (static_cast<int>(z.size()) > z_cap)
    throw CyclicFlatCapExceeded(static_cast<int>(z.size()), z_cap);
  return z;
}

}  // namespace

CheckReport is_transversal(const Matroid& m, int z_cap) {
  const std::vector<Mask> z = capped_cyclic_flats(m, z_cap);
  const MiOutcome o = mason_ingleton_scan(m, z);
  CheckReport r;
  r.id = "mason_ingleton";
  r.instances = static_cast<int>((1u << z.size()) - 1);
  r.pass = !o.violated;
  if (!r.pass) r.witness = family_witness(m, z, o);
  return r;
}

CheckReport is_fundamental_transversal(const Matroid& m, int z_cap) {
  const std::vector<Mask> z = capped_cyclic_flats(m, z_cap);
  const MiOutcome o = mason_ingleton_scan(m, z);
  CheckReport r;
  r.id = "mason_ingleton_equality";
  r.instances = static_cast<int>((1u << z.size()) - 1);
  r.pass = !o.violated && !o.strict;
  if (!r.pass) r.witness = family_witness(m, z, o);
  return r;
}

namespace {

// Does the system present exactly this matroid?  Compares rank tables with
// an early exit on the first mismatch.
bool presents(const SetSystem& sys, const Matroid& m) {
  Matcher matcher(sys);
  for (Mask x = 0; x < m.ground().subset_count(); ++x)
    if (matcher.max_matching(x) != m.rank(x)) return false;
  return true;
}

bool multiset_search(const std::vector<Mask>& cands, size_t from, int slots,
                     SetSystem& sys, const Matroid& m) {
  if (slots == 0) return presents(sys, m);
  for (size_t i = from; i < cands.size(); ++i) {
    sys.sets.push_back(cands[i]);
    if (multiset_search(cands, i, slots - 1, sys, m)) return true;
    sys.sets.pop_back();
  }
  return false;
}

}  // namespace

PresentationSearchResult presentation_search(const Matroid& m, std::uint64_t budget) {
  const std::vector<Mask> z = cyclic_flats(m);
  const int r = m.rank();
  // Multisets of size r from |Z| candidates: C(|Z| + r - 1, r).
  std::uint64_t count = 1;
  for (int i = 1; i <= r; ++i) {
    count = count * (z.size() + static_cast<std::uint64_t>(r) - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i);
    if (count > budget)
      throw SearchBudgetExceeded("presentation search space exceeds budget of " +
                                 std::to_string(budget) + " multisets");
  }
  std::vector<Mask> cands;
  cands.reserve(z.size());
  for (Mask zf : z) cands.push_back(m.full() & ~zf);
  PresentationSearchResult res;
  res.system.ground = m.ground();
  res.found = multiset_search(cands, 0, r, res.system, m);
  if (!res.found) res.system.sets.clear();
  return res;
}

bool has_fundamental_presentation(const SetSystem& sys) {
  for (size_t i = 0; i < sys.sets.size(); ++i) {
    Mask others = 0;
    for (size_t j = 0; j < sys.sets.size(); ++j)
      if (j != i) others |= sys.sets[j];
    if ((sys.sets[i] & ~others) == 0) return false;
  }
  return true;
}

}  // namespace matroid
