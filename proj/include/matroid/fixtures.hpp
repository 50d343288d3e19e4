#pragma once

#include "matroid/constructions.hpp"
#include "matroid/linearalg.hpp"
#include "matroid/matroid.hpp"

namespace matroid::fixtures {

// Rank-2 matroid on {a,b,c,d,e}: d is a loop, b and c are parallel, and
// a, b, e are three distinct points.  Realized over any field by columns
// (1,1), (1,0), (1,0), (0,0), (0,1) up to column scaling.
Matroid five_point_rank2();

// The same matroid as the column matroid of a concrete GF(5) matrix.
FpMatrix five_point_rank2_matrix();

// Rank-3 extension of U_{3,4} on {a,a',b,b'} by a parallel pair {c,c'}
// placed on both of the lines spanned by {a,a'} and {b,b'}.
Matroid two_lines_extension();

// Parallel connection of two 4-point lines at the common point x:
// lines {x,p1,p2,p3} and {x,q1,q2,q3}, rank 3.
Matroid parallel_connection_two_lines();

// Parallel connection of three 4-point lines at x: the two lines above
// plus {x,a,b,c}, rank 4 on 10 elements.
Matroid three_lines_at_point();

// Rank-3 whirl on {a,b,c,d,e,f}: the three-element circuits are exactly
// {a,b,c}, {c,d,e}, {e,f,a} and the rank is 3.
Matroid whirl3();

// A rank-2 extension of the line {a,b,c} whose union with
// add_loops(U_1_3 on {d,e,f}, {a,b,c}) is the whirl above:
// d parallel to c, e a loop, f parallel to a.
Matroid whirl_union_left();
// The corresponding GF(2147483647) matrices for the same union.
FpMatrix whirl_union_left_matrix();
FpMatrix whirl_union_right_matrix();

// U_{1,2} (+) U_{1,2} (+) U_{1,2} on {p1,p2,q1,q2,r1,r2}.
Matroid three_parallel_pairs();
// Its truncation to rank 2 (not transversal).
Matroid truncated_pairs();
// Its free extension by x (fundamental transversal; contracting x gives
// the truncation above).
Matroid pairs_free_extension();

// A frozen principal sum (M, N; A, B) with M and N fundamental transversal
// and A a cyclic flat of M, but B not a cyclic flat of N*, whose sum is
// transversal yet not fundamental transversal.  Found once by seeded
// search and pinned here.
struct FrozenSum {
  Matroid m;
  Matroid n;
  Mask a;
  Mask b;
};
FrozenSum nonfundamental_principal_sum();

}  // namespace matroid::fixtures
