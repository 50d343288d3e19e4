#pragma once

#include <cstdint>
#include <vector>

#include "matroid/check_report.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

// A finite family of subsets of a labeled ground set.  Presents the
// transversal matroid whose independent sets are the partial transversals.
struct SetSystem {
  GroundSet ground;
  std::vector<Mask> sets;
};

// r(X) = maximum matching between the elements of X and the sets that
// contain them.
Matroid transversal_matroid(const SetSystem& sys);

inline constexpr int kCyclicFlatCap = 15;

// Inclusion-exclusion test over families of cyclic flats:
//   r(intersection of A)  <=  sum over nonempty subfamilies A' of A of
//                             (-1)^(|A'|+1) r(union of A')
// holds for every nonempty family A iff the matroid is transversal; it
// holds with equality everywhere iff the matroid is fundamental
// transversal.  Throws CyclicFlatCapExceeded above z_cap cyclic flats.
CheckReport is_transversal(const Matroid& m, int z_cap = kCyclicFlatCap);
CheckReport is_fundamental_transversal(const Matroid& m, int z_cap = kCyclicFlatCap);

// Searches for a presentation with exactly r(M) sets, drawn (as a multiset)
// from the complements of the cyclic flats; a transversal matroid always
// has a maximal presentation of that shape.  Throws SearchBudgetExceeded if
// the multiset space is larger than `budget`.
struct PresentationSearchResult {
  bool found = false;
  SetSystem system;
};
PresentationSearchResult presentation_search(const Matroid& m,
                                             std::uint64_t budget = 200000);

// True iff every set of the system has a private element (one that lies in
// no other set of the system).
bool has_fundamental_presentation(const SetSystem& sys);

}  // namespace matroid
