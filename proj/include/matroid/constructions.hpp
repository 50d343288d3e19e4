#pragma once

#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// ---- building blocks ------------------------------------------------------

Matroid uniform(int r, std::vector<std::string> labels);
Matroid free_matroid(std::vector<std::string> labels);  // rank = |labels|
Matroid loops_on(std::vector<std::string> labels);      // rank 0

// Ground set is M's labels followed by N's labels.
Matroid direct_sum(const Matroid& m, const Matroid& n);

// N plus a set of new loops; the loop labels come FIRST in the result, so
// that add_loops(N, S) lives on the same ordered ground S then T as the
// rank-preserving extensions it gets unioned with.
Matroid add_loops(const Matroid& n, std::vector<std::string> extra);

// ---- union and intersection ----------------------------------------------

// r(X) = min over W subseteq X of r_G(W) + r_H(W) + |X - W|.
Matroid matroid_union(const Matroid& g, const Matroid& h);

// Dual of the union of the duals.
Matroid matroid_intersection(const Matroid& g, const Matroid& h);

// ---- single-element and flat extensions -----------------------------------

// Adds b freely on the flat spanned by A: r(X+b) = min(r(X u A), r(X) + 1).
// The new element is appended at the end of the ground order.
Matroid principal_extension(const Matroid& k, Mask a, const std::string& b);

// Adds every element of B freely on the flat spanned by A, and the
// remaining labels of t_labels as loops.  b_of_t is a mask over t_labels.
// Result lives on K's ground followed by t_labels.
Matroid extension_on_flat(const Matroid& m, Mask a,
                          const std::vector<std::string>& t_labels,
                          Mask b_of_t);

// ---- semidirect sums -------------------------------------------------------

struct PrincipalSumSpec {
  Matroid m;  // on S
  Matroid n;  // on T, labels disjoint from S
  Mask a = 0; // subset of S, in m's ground
  Mask b = 0; // subset of T, in n's ground
};

// The principal sum on S then T:
//   r(X u Y) = min( r_M(X u A) + r_N(Y), r_M(X) + r_N(Y - B) + |Y n B| ).
Matroid principal_sum(const PrincipalSumSpec& s);
inline Matroid principal_sum(const Matroid& m, const Matroid& n, Mask a, Mask b) {
  return principal_sum(PrincipalSumSpec{m, n, a, b});
}

// Principal sum with A = S and B = T.
Matroid free_product(const Matroid& m, const Matroid& n);

// ---- rank shifts -----------------------------------------------------------

Matroid truncation(const Matroid& m, int k);  // requires 0 <= k <= r(M)
Matroid free_extension(const Matroid& m, const std::string& e);
Matroid free_coextension(const Matroid& m, const std::string& e);

// ---- Higgs lifts ------------------------------------------------------------

struct HiggsSpec {
  Matroid q;  // quotient end
  Matroid l;  // lift end, same ground; q must be a quotient of l
  int i = 0;
};

// The i-th Higgs lift of q toward l: r(W) = min(r_Q(W) + i, r_L(W)), with
// the convention that indices below 0 clamp to q and above r(L)-r(Q) to l.
Matroid higgs_lift(const HiggsSpec& s);
inline Matroid higgs_lift(const Matroid& q, const Matroid& l, int i) {
  return higgs_lift(HiggsSpec{q, l, i});
}

// The Higgs lift route to a semidirect sum: lifts m_q (+) n toward
// m (+) n_l by r(M) - r(M_q) steps.  m_q must be a quotient of m and n a
// quotient of n_l; grounds S and T must be disjoint.
Matroid higgs_semidirect(const Matroid& m, const Matroid& m_q,
                         const Matroid& n, const Matroid& n_l);

// ---- small rank surgeries (all on the unchanged ground set) ----------------

// (M/A) with A kept as loops: r(X) = r_M(X u A) - r_M(A).  A quotient of M.
Matroid contract_keep_loops(const Matroid& m, Mask a);

// (M\A) with A kept as loops: r(X) = r_M(X - A).
Matroid delete_keep_loops(const Matroid& m, Mask a);

// (M\B) with B kept as coloops: r(X) = r_M(X - B) + |X n B|.  A lift of M.
Matroid delete_keep_coloops(const Matroid& m, Mask b);

}  // namespace matroid
