#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroid/errors.hpp"
#include "matroid/ground_set.hpp"
#include "matroid/mask.hpp"

namespace matroid {

// A matroid on a labeled ground set, stored as its full rank table:
// table[m] = rank of the subset with mask m.  The table is the canonical
// representation; two matroids are equal iff their ground sets and tables
// are equal.  Construction validates the four rank axioms, so any value of
// this type is a genuine matroid.
class Matroid {
 public:
  Matroid() : ground_(), table_(1, 0) {}

  // Validates the axioms; throws AxiomViolation / InvalidTable.
  static Matroid from_table(GroundSet g, std::vector<std::uint8_t> table);
  static Matroid from_table(GroundSet g, const std::vector<int>& table);

  // Caller guarantees validity.  Used nowhere in the test suite.
  static Matroid from_table_unchecked(GroundSet g, std::vector<std::uint8_t> table);

  // Builds the table from a callable Mask -> int, then validates.
  template <class Fn>
  static Matroid from_rank_fn(GroundSet g, Fn&& f) {
    std::vector<std::uint8_t> t(g.subset_count());
    for (Mask m = 0; m < t.size(); ++m) t[m] = static_cast<std::uint8_t>(f(m));
    return from_table(std::move(g), std::move(t));
  }

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }

  int rank(Mask x) const { return table_[x]; }
  int rank() const { return table_[ground_.full()]; }
  const std::vector<std::uint8_t>& table() const { return table_; }

 private:
  Matroid(GroundSet g, std::vector<std::uint8_t> t)
      : ground_(std::move(g)), table_(std::move(t)) {}
  GroundSet ground_;
  std::vector<std::uint8_t> table_;
};

// Throws AxiomViolation with a witness pair on the first failure found.
void validate_rank_table(const GroundSet& g, const std::vector<std::uint8_t>& table);

// ---- basic queries ------------------------------------------------------

inline bool is_independent(const Matroid& m, Mask x) {
  return m.rank(x) == popcount(x);
}

std::vector<Mask> bases(const Matroid& m);
bool is_basis(const Matroid& m, Mask x);

// cl(X) = X plus every element whose addition leaves the rank unchanged.
Mask closure(const Matroid& m, Mask x);

std::vector<Mask> circuits(const Matroid& m);
bool is_circuit(const Matroid& m, Mask x);

// The unique circuit inside basis+element.  Throws NotABasis / ElementInBasis.
Mask fundamental_circuit(const Matroid& m, Mask basis, int element);

std::vector<Mask> flats(const Matroid& m);
bool is_flat(const Matroid& m, Mask x);

// X is cyclic iff it is a (possibly empty) union of circuits, equivalently
// iff no element of X raises the rank when removed.
bool is_cyclic(const Matroid& m, Mask x);
std::vector<Mask> cyclic_flats(const Matroid& m);

Mask loops(const Matroid& m);
Mask coloops(const Matroid& m);

Matroid dual(const Matroid& m);

// (m \ del) / contracted, on the remaining labels in their original order.
Matroid minor(const Matroid& m, Mask del, Mask contracted);

// Labeled comparison; both throw GroundSetMismatch on different grounds.
bool equals(const Matroid& a, const Matroid& b);
bool weak_leq(const Matroid& a, const Matroid& b);  // rank table pointwise <=

// q is a quotient of l iff every closure in l is contained in the closure
// in q of the same set.
bool is_quotient(const Matroid& q, const Matroid& l);

std::vector<Mask> separators(const Matroid& m);
bool is_connected(const Matroid& m);

// Region of a pair (X, Y), X in M's ground, Y in N's ground, relative to
// the pair (A, B): compares r_M(X u A) + r_N(Y) against
// r_M(X) + r_N(Y - B) + |Y n B|.
enum class RegionClass { Less, Equal, Greater };
RegionClass classify_region(const Matroid& m, const Matroid& n, Mask a, Mask b,
                            Mask x, Mask y);

// ---- plumbing -----------------------------------------------------------

// Same structure, new label names (size must match).
Matroid with_labels(const Matroid& m, std::vector<std::string> labels);

// Same matroid with the ground set permuted into the given label order.
Matroid reordered(const Matroid& m, const std::vector<std::string>& order);

// Translates a mask between two ground sets by label (throws UnknownLabel
// if some element of m is missing from `to`).
Mask translate_mask(const GroundSet& from, Mask m, const GroundSet& to);

}  // namespace matroid
