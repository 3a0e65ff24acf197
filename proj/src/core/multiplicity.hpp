#pragma once

// Closed-form evaluation of the SU(3) triple multiplicity
//
//     c(t) = #{ x integer : max_q g_q(t) <= x <= min_p f_p(t) }
//          = max(0, 1 + min_p f_p(t) - max_q g_q(t))
//
// on lattice points, 0 elsewhere, together with the per-chamber linear
// formulas 1 + f_i - g_j, the determinant/volume form, and the SU(2) base
// case.

#include "core/forms.hpp"
#include "core/types.hpp"

namespace su3 {

// Total on integer labels: 0 off the lattice, off the cone, or off the
// nonnegative orthant (the fiber is empty in all three cases).
i64 triple_multiplicity(const TripleLabel& t);

// Multiplicity of V_n in V_l (x) V_m, i.e. c(l, m, n*).
i64 tensor_multiplicity(DynkinLabel l, DynkinLabel m, DynkinLabel n);

// Exact linear form with integer numerators over a fixed denominator of 3.
struct LinearForm {
  std::array<i64, 6> num{};  // value(t) = <num, t> / 3
  // Exact evaluation; throws std::domain_error when <num,t> is not
  // divisible by 3 (i.e. when misapplied to a non-lattice point).
  i64 eval(const TripleLabel& t) const;
  bool integral_at(const TripleLabel& t) const;
};

// The form L(i,j) = f_i - g_j with c = 1 + L(i,j) on the chamber C(i,j).
// Indices are 1-based: i in 1..3, j in 1..6.
LinearForm chamber_formula(int i, int j);

// c(t) as 1 + min over all 18 pairs of (f_i - g_j); defined on cone lattice
// points, where it agrees with triple_multiplicity. Throws std::domain_error
// off the lattice or cone.
i64 multiplicity_via_min(const TripleLabel& t);

// c(t) as 1 + (1/3)|det M(t1..t5, t)| with t1..t5 the exterior ray
// generators of chamber C(i,j); valid on the closed chamber.
// Throws std::domain_error when t is not in C(i,j).
i64 multiplicity_det(const TripleLabel& t, int i, int j);

// SU(2): 1 iff l+m+n is even and l, m, n satisfy the triangle inequalities.
// Standalone; throws std::domain_error on negative input.
i64 su2_multiplicity(i64 l, i64 m, i64 n);

// Fraction-free determinant of a 6x6 integer matrix (columns given).
i64 det6(const std::array<Vec6, 6>& cols);

}  // namespace su3
