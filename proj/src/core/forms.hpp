#pragma once

// The nine linear forms attached to a triple label t:
//
//   f1 = 0            g1 = -m2           g4 = -m2 - w
//   f2 = l1 - m2 - w  g2 = -n1           g5 = -n1 + w
//   f3 = l2 - n1 + w  g3 = l1-m2-n2 - w  g6 = l2-m1-n1 + w
//
// with w = (l1+m1+n1-l2-m2-n2)/3. All values are rationals with denominator
// dividing 3 and are integers exactly on the mod-3 lattice. They are stored
// scaled by 3, keeping every computation in int64.
//
// The label cone is { t : max_q g_q(t) <= min_p f_p(t) }; the fiber of BZ
// labellings over a lattice point t is { x integer : max g <= x <= min f }.

#include "core/types.hpp"

namespace su3 {

struct Forms {
  std::array<i64, 3> f3{};  // 3*f_i
  std::array<i64, 6> g3{};  // 3*g_j
  i64 w3 = 0;               // 3*w

  i64 min_f3() const;
  i64 max_g3() const;

  // Integer values; valid only when the underlying label is in the lattice.
  bool integral() const;
  i64 f(int i) const { return f3[i] / 3; }  // i in 0..2
  i64 g(int j) const { return g3[j] / 3; }  // j in 0..5
  i64 omega() const { return w3 / 3; }
};

Forms eval_forms(const TripleLabel& t);

// Cone membership (all 18 inequalities g_j <= f_i at once).
bool in_cone(const Forms& fo);
bool in_cone(const TripleLabel& t);

}  // namespace su3
