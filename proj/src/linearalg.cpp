#include "matroid/linearalg.hpp"

#include <algorithm>
#include <random>

namespace matroid {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit integers with the bases above.
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % p, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpMatrix::FpMatrix(std::uint64_t p, int rows, GroundSet cols,
                   std::vector<std::uint64_t> entries)
    : p_(p), rows_(rows), cols_(std::move(cols)), a_(std::move(entries)) {
  if (!is_prime(p_)) throw NonPrimeModulus(p_);
  if (p_ >> 32)
    throw DimensionMismatch("modulus must fit in 32 bits");
  if (rows_ < 0 ||
      a_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_.size()))
    throw DimensionMismatch("entry count does not match rows x cols");
  for (auto& v : a_) v %= p_;
}

int submatrix_rank(const FpMatrix& d, Mask cols) {
  const std::uint64_t p = d.p();
  std::vector<int> picked;
  for_each_bit(cols, [&](int c) { picked.push_back(c); });
  const int nc = static_cast<int>(picked.size());
  const int nr = d.rows();
  std::vector<std::uint64_t> a(static_cast<size_t>(nr) * static_cast<size_t>(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      a[static_cast<size_t>(r) * static_cast<size_t>(nc) + static_cast<size_t>(c)] = d.at(r, picked[static_cast<size_t>(c)]);

  auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<size_t>(r) * static_cast<size_t>(nc) + static_cast<size_t>(c)];
  };
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int cc = 0; cc < nc; ++cc) std::swap(at(pivot, cc), at(rank, cc));
    const std::uint64_t inv = invmod(at(rank, c), p);
    for (int cc = c; cc < nc; ++cc) at(rank, cc) = mulmod(at(rank, cc), inv, p);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const std::uint64_t f = at(r, c);
      for (int cc = c; cc < nc; ++cc)
        at(r, cc) = (at(r, cc) + p - mulmod(f, at(rank, cc), p)) % p;
    }
    ++rank;
  }
  return rank;
}

Matroid column_matroid(const FpMatrix& d) {
  return Matroid::from_rank_fn(d.ground(),
                               [&](Mask x) { return submatrix_rank(d, x); });
}

FpMatrix block_triangular(const FpMatrix& a, const FpMatrix& b, const FpMatrix& u) {
  if (a.p() != b.p() || a.p() != u.p())
    throw DimensionMismatch("blocks must share the same modulus");
  if (u.rows() != a.rows() || u.cols() != b.cols())
    throw DimensionMismatch("connecting block must be rows(A) x cols(B)");
  GroundSet g = concat(a.ground(), b.ground());
  const int rows = a.rows() + b.rows();
  const int cols = g.size();
  std::vector<std::uint64_t> e(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
  auto put = [&](int r, int c, std::uint64_t v) {
    e[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)] = v;
  };
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) put(r, c, a.at(r, c));
    for (int c = 0; c < b.cols(); ++c) put(r, a.cols() + c, u.at(r, c));
  }
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) put(a.rows() + r, a.cols() + c, b.at(r, c));
  return FpMatrix(a.p(), rows, std::move(g), std::move(e));
}

FpMatrix contraction_block(const FpMatrix& d, Mask e1) {
  const std::uint64_t p = d.p();
  const int nr = d.rows(), nc = d.cols();
  std::vector<std::uint64_t> a(static_cast<size_t>(nr) * static_cast<size_t>(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      a[static_cast<size_t>(r) * static_cast<size_t>(nc) + static_cast<size_t>(c)] = d.at(r, c);
  auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<size_t>(r) * static_cast<size_t>(nc) + static_cast<size_t>(c)];
  };

  // Eliminate on the e1 columns only: after this loop the first `rank` rows
  // carry a basis of col(E1) and every other row is zero on all of e1.
  int rank = 0;
  for_each_bit(e1, [&](int c) {
    if (rank >= nr) return;
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return;
    for (int cc = 0; cc < nc; ++cc) std::swap(at(pivot, cc), at(rank, cc));
    const std::uint64_t inv = invmod(at(rank, c), p);
    for (int cc = 0; cc < nc; ++cc) at(rank, cc) = mulmod(at(rank, cc), inv, p);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const std::uint64_t f = at(r, c);
      for (int cc = 0; cc < nc; ++cc)
        at(r, cc) = (at(r, cc) + p - mulmod(f, at(rank, cc), p)) % p;
    }
    ++rank;
  });

  std::vector<std::string> keep_labels;
  std::vector<int> keep_cols;
  for (int c = 0; c < nc; ++c)
    if (!contains(e1, c)) {
      keep_labels.push_back(d.ground().label(c));
      keep_cols.push_back(c);
    }
  const int out_rows = nr - rank;
  std::vector<std::uint64_t> out(static_cast<size_t>(out_rows) * keep_cols.size());
  for (int r = 0; r < out_rows; ++r)
    for (size_t c = 0; c < keep_cols.size(); ++c)
      out[static_cast<size_t>(r) * keep_cols.size() + c] = at(rank + r, keep_cols[c]);
  return FpMatrix(p, out_rows, GroundSet(std::move(keep_labels)), std::move(out));
}

Matroid generic_union(const FpMatrix& g, const FpMatrix& h, std::uint64_t seed,
                      int trials) {
  if (g.p() != h.p())
    throw DimensionMismatch("operands must share the same modulus");
  if (g.ground() != h.ground()) throw GroundSetMismatch();
  if (g.p() < (1u << 20)) throw ModulusTooSmall(g.p());
  if (trials < 1) throw DimensionMismatch("at least one trial required");

  const std::uint64_t p = g.p();
  const int nc = g.cols();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> best(g.ground().subset_count(), 0);
  for (int t = 0; t < trials; ++t) {
    // One scalar per column of g, mimicking one generic multiplier each.
    std::vector<std::uint64_t> scale(static_cast<size_t>(nc));
    for (auto& s : scale) s = 1 + rng() % (p - 1);
    const int rows = g.rows() + h.rows();
    std::vector<std::uint64_t> e(static_cast<size_t>(rows) * static_cast<size_t>(nc));
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < nc; ++c)
        e[static_cast<size_t>(r) * static_cast<size_t>(nc) + static_cast<size_t>(c)] = mulmod(g.at(r, c), scale[static_cast<size_t>(c)], p);
    for (int r = 0; r < h.rows(); ++r)
      for (int c = 0; c < nc; ++c)
        e[static_cast<size_t>(g.rows() + r) * static_cast<size_t>(nc) + static_cast<size_t>(c)] = h.at(r, c);
    const FpMatrix stacked(p, rows, g.ground(), std::move(e));
    // Every column subset independent in the stack splits into a
    // g-independent and an h-independent part, so each trial's table is
    // bounded above by the true union's table; the pointwise maximum
    // therefore never overshoots it.
    for (Mask x = 0; x < best.size(); ++x) {
      const int r = submatrix_rank(stacked, x);
      if (r > best[x]) best[x] = static_cast<std::uint8_t>(r);
    }
  }
  return Matroid::from_table(g.ground(), std::move(best));
}

}  // namespace matroid
