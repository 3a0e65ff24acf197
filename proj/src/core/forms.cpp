#include "core/forms.hpp"

#include <algorithm>

namespace su3 {

i64 Forms::min_f3() const { return *std::min_element(f3.begin(), f3.end()); }
i64 Forms::max_g3() const { return *std::max_element(g3.begin(), g3.end()); }

bool Forms::integral() const {
  if (w3 % 3 != 0) return false;
  for (i64 x : f3)
    if (x % 3 != 0) return false;
  for (i64 x : g3)
    if (x % 3 != 0) return false;
  return true;
}

Forms eval_forms(const TripleLabel& t) {
  const i64 l1 = t.l1(), l2 = t.l2(), m1 = t.m1(), m2 = t.m2(), n1 = t.n1(),
            n2 = t.n2();
  const i64 w = l1 + m1 + n1 - l2 - m2 - n2;  // 3*omega
  Forms fo;
  fo.w3 = w;
  fo.f3 = {0, 3 * (l1 - m2) - w, 3 * (l2 - n1) + w};
  fo.g3 = {-3 * m2,           -3 * n1,      3 * (l1 - m2 - n2) - w,
           -3 * m2 - w,       -3 * n1 + w,  3 * (l2 - m1 - n1) + w};
  return fo;
}

bool in_cone(const Forms& fo) { return fo.min_f3() >= fo.max_g3(); }

bool in_cone(const TripleLabel& t) { return in_cone(eval_forms(t)); }

}  // namespace su3
