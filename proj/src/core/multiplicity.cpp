#include "core/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/cells.hpp"
#include "core/rays.hpp"

namespace su3 {

i64 triple_multiplicity(const TripleLabel& t) {
  if (!t.nonnegative()) return 0;
  if (!in_lattice(t)) return 0;
  Forms fo = eval_forms(t);
  i64 len3 = fo.min_f3() - fo.max_g3();
  if (len3 < 0) return 0;
  return len3 / 3 + 1;
}

i64 tensor_multiplicity(DynkinLabel l, DynkinLabel m, DynkinLabel n) {
  return triple_multiplicity(TripleLabel{l, m, dual(n)});
}

i64 LinearForm::eval(const TripleLabel& t) const {
  i64 s = 0;
  for (int k = 0; k < 6; ++k) s += num[k] * t.v[k];
  if (s % 3 != 0)
    throw std::domain_error("LinearForm: value not integral (non-lattice point)");
  return s / 3;
}

bool LinearForm::integral_at(const TripleLabel& t) const {
  i64 s = 0;
  for (int k = 0; k < 6; ++k) s += num[k] * t.v[k];
  return s % 3 == 0;
}

LinearForm chamber_formula(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 6)
    throw std::invalid_argument("chamber_formula: index out of range");
  LinearForm form;
  for (int k = 0; k < 6; ++k) {
    Vec6 e{};
    e[k] = 1;
    Forms fo = eval_forms(TripleLabel{e});
    form.num[k] = fo.f3[i - 1] - fo.g3[j - 1];
  }
  return form;
}

i64 multiplicity_via_min(const TripleLabel& t) {
  if (!in_lattice(t))
    throw std::domain_error("multiplicity_via_min: label not in the lattice");
  Forms fo = eval_forms(t);
  if (!in_cone(fo))
    throw std::domain_error("multiplicity_via_min: label outside the cone");
  i64 best = fo.f3[0] - fo.g3[0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) best = std::min(best, fo.f3[i] - fo.g3[j]);
  return 1 + best / 3;
}

i64 det6(const std::array<Vec6, 6>& cols) {
  // Bareiss fraction-free elimination; exact over int64 for the matrices
  // used here (five 0/1 ray columns and one label column).
  i64 a[6][6];
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) a[r][c] = cols[c][r];
  i64 sign = 1, prev = 1;
  for (int k = 0; k < 6; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < 6; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < 6; ++c) std::swap(a[k][c], a[p][c]);
      sign = -sign;
    }
    for (int r = k + 1; r < 6; ++r)
      for (int c = k + 1; c < 6; ++c)
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * a[5][5];
}

i64 multiplicity_det(const TripleLabel& t, int i, int j) {
  if (!in_chamber(t, i, j))
    throw std::domain_error("multiplicity_det: label not in the named chamber");
  const Chamber& ch = chambers()[(i - 1) * 6 + (j - 1)];
  std::array<Vec6, 6> cols{};
  int k = 0;
  for (int r = 0; r < kNumRays; ++r)
    if (r != kStar && ch.cell.contains_ray(static_cast<Ray>(r)))
      cols[k++] = kRayVectors[r];
  cols[5] = t.v;
  i64 d = det6(cols);
  if (d % 3 != 0)
    throw std::logic_error("multiplicity_det: determinant not divisible by 3");
  return 1 + std::abs(d) / 3;
}

i64 su2_multiplicity(i64 l, i64 m, i64 n) {
  if (l < 0 || m < 0 || n < 0)
    throw std::domain_error("su2_multiplicity: negative label");
  if ((l + m + n) % 2 != 0) return 0;
  if (l > m + n || m > l + n || n > l + m) return 0;
  return 1;
}

}  // namespace su3
