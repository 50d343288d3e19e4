#pragma once

#include <cstdint>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// A dense matrix over GF(p), columns labeled by a ground set.  Entries are
// stored row-major, reduced mod p at construction.  p must be an odd or
// even prime below 2^32 (products then fit in 64-bit intermediates).
class FpMatrix {
 public:
  FpMatrix(std::uint64_t p, int rows, GroundSet cols,
           std::vector<std::uint64_t> entries);

  std::uint64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_.size(); }
  const GroundSet& ground() const { return cols_; }
  std::uint64_t at(int r, int c) const {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_.size()) + static_cast<size_t>(c)];
  }

 private:
  std::uint64_t p_;
  int rows_;
  GroundSet cols_;
  std::vector<std::uint64_t> a_;
};

bool is_prime(std::uint64_t p);

// Rank over GF(p) of the submatrix picked out by the column mask.
int submatrix_rank(const FpMatrix& d, Mask cols);

// The column matroid: rank of every column subset, each computed by an
// independent Gaussian elimination.
Matroid column_matroid(const FpMatrix& d);

// Assembles [A U; 0 B]; column labels are A's followed by B's.  Requires
// matching moduli and U of shape rows(A) x cols(B).
FpMatrix block_triangular(const FpMatrix& a, const FpMatrix& b, const FpMatrix& u);

// Row-reduces d so that a basis of the columns in e1 becomes an identity-like
// block with zeros below, then returns the lower-right block on the columns
// outside e1.  Its column matroid is the contraction of col(d) by e1.
FpMatrix contraction_block(const FpMatrix& d, Mask e1);

// Models the union of two represented matroids by substituting seeded
// random nonzero scalars for the generic column multipliers of g, stacking
// the result on top of h, and taking the column matroid; the best (weak
// order maximum) of `trials` attempts is returned.  Each attempt misses the
// true union with probability at most n * 2^n * r / p, so the result is
// correct with overwhelming probability at the default p = 2^31 - 1, and it
// is never freer than the true union.  Requires p >= 2^20.
Matroid generic_union(const FpMatrix& g, const FpMatrix& h, std::uint64_t seed,
                      int trials = 3);

}  // namespace matroid
