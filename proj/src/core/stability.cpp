#include "core/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/cells.hpp"
#include "core/forms.hpp"
#include "core/multiplicity.hpp"

namespace su3 {

namespace {

void check_preconditions(const TripleLabel& t, const TripleLabel& u) {
  if (!in_lattice(t) || !in_lattice(u))
    throw std::domain_error("stable_value: labels must be lattice points");
  if (!in_cone(u))
    throw std::domain_error("stable_value: direction outside the cone");
  if (triple_multiplicity(u) != 1)
    throw std::domain_error("stable_value: direction must have multiplicity 1");
}

// Lexicographic comparison of a + eps*b values for infinitesimal eps > 0.
struct SymbolicValue {
  i64 at_u;  // leading term
  i64 at_t;  // epsilon coefficient

  friend bool operator<(const SymbolicValue& x, const SymbolicValue& y) {
    return x.at_u != y.at_u ? x.at_u < y.at_u : x.at_t < y.at_t;
  }
};

}  // namespace

i64 stable_value(const TripleLabel& t, const TripleLabel& u) {
  check_preconditions(t, u);
  const Forms fu = eval_forms(u);
  const Forms ft = eval_forms(t);

  // min of L_ij(t) over chambers whose closure contains u, i.e. pairs (i,j)
  // where f_i(u) = min f(u) and g_j(u) = max g(u).
  const i64 minf_u = fu.min_f3(), maxg_u = fu.max_g3();
  bool have = false;
  i64 best3 = 0;
  for (int i = 0; i < 3; ++i) {
    if (fu.f3[i] != minf_u) continue;
    for (int j = 0; j < 6; ++j) {
      if (fu.g3[j] != maxg_u) continue;
      i64 l3 = ft.f3[i] - ft.g3[j];
      if (!have || l3 < best3) best3 = l3, have = true;
    }
  }
  if (!have) throw std::logic_error("stable_value: no containing chamber");
  const i64 value = std::max<i64>(0, 1 + best3 / 3);

  // Cross-check with the limit chamber of u + eps*t: locate by symbolic
  // perturbation. The chamber exists iff the perturbed point stays in the
  // cone; otherwise the sequence is eventually 0.
  SymbolicValue minf{fu.f3[0], ft.f3[0]}, maxg{fu.g3[0], ft.g3[0]};
  for (int i = 1; i < 3; ++i)
    minf = std::min(minf, SymbolicValue{fu.f3[i], ft.f3[i]});
  for (int j = 1; j < 6; ++j)
    maxg = std::max(maxg, SymbolicValue{fu.g3[j], ft.g3[j]});
  if (!(minf < maxg)) {
    // Perturbed point in the cone; the pair attaining the symbolic extremes
    // is the limit chamber, and its formula must reproduce the minimum.
    i64 cross3 = 0;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
      for (int j = 0; j < 6 && !found; ++j)
        if (fu.f3[i] == minf.at_u && ft.f3[i] == minf.at_t &&
            fu.g3[j] == maxg.at_u && ft.g3[j] == maxg.at_t) {
          cross3 = ft.f3[i] - ft.g3[j];
          found = true;
        }
    if (!found || std::max<i64>(0, 1 + cross3 / 3) != value)
      throw std::logic_error("stable_value: chamber limit disagrees with minimum");
  } else {
    // u + eps*t leaves the cone; the limit must be the clamped zero.
    if (value != 0)
      throw std::logic_error("stable_value: expected vanishing limit");
  }
  return value;
}

std::optional<i64> stabilization_index(const TripleLabel& t,
                                       const TripleLabel& u, i64 k_max) {
  const i64 target = stable_value(t, u);
  if (k_max < 0) return std::nullopt;
  std::optional<i64> first;
  for (i64 k = 0; k <= k_max; ++k) {
    i64 c = triple_multiplicity(t + k * u);
    if (c == target) {
      if (!first) first = k;
    } else {
      first.reset();
    }
  }
  return first;
}

}  // namespace su3
