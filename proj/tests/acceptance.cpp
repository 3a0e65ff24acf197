// Acceptance suite: runs every criterion end to end and prints one PASS or
// FAIL line per criterion. Exit code is the number of failed criteria.

#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/bz.hpp"
#include "core/cells.hpp"
#include "core/forms.hpp"
#include "core/lr.hpp"
#include "core/multiplicity.hpp"
#include "core/stability.hpp"
#include "core/symmetry.hpp"
#include "core/types.hpp"
#include "core/verify.hpp"

using namespace su3;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::vector<std::array<i64, 3>> partitions_max_first(i64 max_first) {
  std::vector<std::array<i64, 3>> out;
  for (i64 a = 0; a <= max_first; ++a)
    for (i64 b = 0; b <= a; ++b)
      for (i64 c = 0; c <= b; ++c) out.push_back({a, b, c});
  return out;
}

void criterion_1(const std::vector<TripleLabel>& sweep) {
  for (const TripleLabel& t : sweep) {
    i64 closed = triple_multiplicity(t);
    i64 scan = static_cast<i64>(enumerate_fiber(t, FiberMode::kScan).size());
    i64 exhaustive = fiber_count_exhaustive(t);
    if (closed != scan || closed != exhaustive) {
      std::ostringstream os;
      os << "t=" << format_triple(t) << " closed=" << closed << " scan=" << scan
         << " exhaustive=" << exhaustive;
      report(1, "oracle equivalence", false, os.str());
      return;
    }
  }
  std::ostringstream os;
  os << "closed form = x-scan = exhaustive search on " << sweep.size()
     << " lattice points";
  report(1, "oracle equivalence", true, os.str());
}

void criterion_2() {
  // Partitions with at most three parts, grouped by size (sizes up to 18).
  std::vector<std::vector<std::array<i64, 3>>> by_size(19);
  for (const auto& p : partitions_max_first(18)) {
    i64 s = p[0] + p[1] + p[2];
    if (s <= 18) by_size[static_cast<std::size_t>(s)].push_back(p);
  }
  long checked = 0;
  for (const auto& nu : partitions_max_first(6)) {
    i64 size_nu = nu[0] + nu[1] + nu[2];
    for (i64 a = 0; a <= size_nu; ++a)
      for (const auto& lambda : by_size[static_cast<std::size_t>(a)])
        for (const auto& mu : by_size[static_cast<std::size_t>(size_nu - a)]) {
          GLTriple g;
          g.lambda = lambda;
          g.mu = mu;
          g.nu = nu;
          if (lr_coefficient(g) != lr_tableau_oracle(g)) {
            report(2, "LR equivalence", false, "g=" + format_gl(g));
            return;
          }
          ++checked;
        }
  }
  std::ostringstream os;
  os << "closed form = tableau oracle on " << checked << " partition triples";
  report(2, "LR equivalence", true, os.str());
}

void criterion_3(const std::vector<TripleLabel>& sweep) {
  bool ok = triple_multiplicity(TripleLabel{1, 1, 1, 1, 1, 1}) == 2;
  std::string detail = "c(star)=2";
  for (int r = 0; ok && r < kNumRays; ++r) {
    i64 expected = (r == kStar) ? 2 : 1;
    if (triple_multiplicity(ray_generator(static_cast<Ray>(r))) != expected) {
      ok = false;
      detail = std::string("ray ") + kRayNames[r];
    }
  }
  if (ok) {
    for (const TripleLabel& t : sweep) {
      if (!in_cone(t)) continue;
      bool has_zero = false;
      for (i64 c : t.v) has_zero |= (c == 0);
      if (has_zero && triple_multiplicity(t) != 1) {
        ok = false;
        detail = "vanishing coordinate at t=" + format_triple(t);
        break;
      }
    }
  }
  if (ok) detail = "c(star)=2, eight exterior rays give 1, zero coordinate gives 1";
  report(3, "known values", ok, detail);
}

void criterion_4() {
  bool ok = true;
  std::string detail;
  if (cells().size() != 294) {
    ok = false;
    detail = "total cells != 294";
  }
  auto counts = cell_counts();
  if (ok && counts != std::array<int, 7>{1, 9, 35, 75, 93, 63, 18}) {
    ok = false;
    detail = "f-vector mismatch";
  }
  if (ok && chambers().size() != 18) {
    ok = false;
    detail = "chamber count != 18";
  }
  if (ok) {
    for (const Chamber& ch : chambers()) {
      std::array<Vec6, 6> cols{};
      int k = 0;
      for (int r = 0; r < kNumRays; ++r)
        if (ch.cell.contains_ray(static_cast<Ray>(r))) cols[k++] = kRayVectors[r];
      i64 d = (k == 6) ? det6(cols) : 0;
      if (d != 3 && d != -3) {
        ok = false;
        std::ostringstream os;
        os << "chamber C(" << ch.i << "," << ch.j << ") determinant " << d;
        detail = os.str();
        break;
      }
    }
  }
  if (ok)
    detail = "18 chambers, f-vector 1 9 35 75 93 63 18, 294 cells, "
             "simplicial with basis determinant +-3";
  report(4, "chamber complex", ok, detail);
}

void criterion_5(const std::vector<TripleLabel>& sweep) {
  const SymmetryGroup& group = symmetry_group();
  bool ok = true;
  std::string detail;
  if (group.order(Group::kG) != 144 || group.order(Group::kGg) != 12 ||
      group.order(Group::kGl) != 72 || group.order(Group::kGlg) != 6) {
    ok = false;
    detail = "subgroup orders differ from 144/12/72/6";
  }
  // Unimodularity and lattice preservation, rechecked in place.
  for (const Symmetry& s : group.all()) {
    if (!ok) break;
    if (det_num(s.mat) != 729 && det_num(s.mat) != -729) {
      ok = false;
      detail = "non-unimodular matrix";
      break;
    }
    for (int r = 0; r < kNumRays; ++r)
      if (!in_lattice(s.mat.apply(ray_generator(static_cast<Ray>(r))))) {
        ok = false;
        detail = "lattice image violation";
        break;
      }
  }
  if (ok) {
    for (const TripleLabel& t : sweep) {
      i64 c = triple_multiplicity(t);
      for (const Symmetry& s : group.all())
        if (triple_multiplicity(s.mat.apply(t)) != c) {
          ok = false;
          detail = "invariance fails at t=" + format_triple(t);
          break;
        }
      if (!ok) break;
    }
  }
  if (ok) {
    int lifts = 0;
    for (const Symmetry& s : group.all()) {
      bool has = group.lift(s.index).has_value();
      bool in_gl = std::binary_search(group.members(Group::kGl).begin(),
                                      group.members(Group::kGl).end(), s.index);
      if (has != in_gl) {
        ok = false;
        detail = "liftable set differs from Gl";
        break;
      }
      lifts += has;
    }
    if (ok && lifts != 72) {
      ok = false;
      detail = "lift count != 72";
    }
    if (ok && (group.lift(group.duality_index()).has_value() ||
               group.lift(group.swap_lm_index()).has_value())) {
      ok = false;
      detail = "duality or l<->m unexpectedly lifts";
    }
  }
  if (ok)
    detail = "orders 144/12/72/6, all matrices unimodular and invariant, "
             "exactly the 72 elements of Gl lift";
  report(5, "symmetry groups", ok, detail);
}

void criterion_6() {
  auto add = [](BZLabelling a, const BZLabelling& b) {
    for (int i = 0; i < 3; ++i) a.y[i] += b.y[i];
    for (int j = 0; j < 6; ++j) a.z[j] += b.z[j];
    return a;
  };
  BZLabelling d = add(add(fundamental_triangle(kD1), fundamental_triangle(kD3)),
                      fundamental_triangle(kD5));
  BZLabelling tri = add(fundamental_triangle(kLT), fundamental_triangle(kRT));
  BZLabelling c = add(add(fundamental_triangle(kC1), fundamental_triangle(kC2)),
                      fundamental_triangle(kC3));
  bool ok = (d == tri) && !(c == tri);
  report(6, "obstruction identity", ok,
         ok ? "D1+D3+D5 = LT+RT while C1+C2+C3 differs"
            : "fundamental triangle relation violated");
}

void criterion_7() {
  const SymmetryGroup& group = symmetry_group();
  auto cell = Cell::from_names("C3,D3,LT");
  bool ok = cell.has_value();
  std::string detail = "cell C3,D3,LT missing";
  if (ok) {
    std::size_t glg = group.orbit(Group::kGlg, *cell).size();
    std::size_t gg = group.orbit(Group::kGg, *cell).size();
    std::size_t gl = group.orbit(Group::kGl, *cell).size();
    std::size_t g = group.orbit(Group::kG, *cell).size();
    ok = glg == 6 && gg == 6 && gl == 18 && g == 18;
    std::ostringstream os;
    os << "orbit sizes Glg=" << glg << " Gg=" << gg << " Gl=" << gl << " G=" << g;
    detail = os.str();
  }
  report(7, "orbit sizes", ok, detail);
}

void criterion_8() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<i64> coeff(0, 3);
  for (const Chamber& ch : chambers()) {
    std::array<Vec6, 6> rays{};
    int k = 0;
    for (int r = 0; r < kNumRays; ++r)
      if (ch.cell.contains_ray(static_cast<Ray>(r))) rays[k++] = kRayVectors[r];
    for (int trial = 0; trial < 200; ++trial) {
      Vec6 v{};
      for (int q = 0; q < 6; ++q) {
        i64 a = coeff(rng);
        for (int c = 0; c < 6; ++c) v[c] += a * rays[q][c];
      }
      TripleLabel t{v};
      i64 via_det = multiplicity_det(t, ch.i, ch.j);
      i64 closed = triple_multiplicity(t);
      if (via_det != closed) {
        std::ostringstream os;
        os << "C(" << ch.i << "," << ch.j << ") t=" << format_triple(t)
           << " det-formula=" << via_det << " closed=" << closed;
        report(8, "determinant formula", false, os.str());
        return;
      }
    }
  }
  report(8, "determinant formula", true,
         "1 + |det|/3 matches on 200 random points in each chamber");
}

void criterion_9() {
  std::mt19937_64 rng(20240917);
  auto sweep = lattice_sweep(4);
  std::vector<TripleLabel> units;
  for (const TripleLabel& u : sweep)
    if (in_cone(u) && triple_multiplicity(u) == 1) units.push_back(u);
  std::uniform_int_distribution<std::size_t> pick_t(0, sweep.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_u(0, units.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    TripleLabel t = sweep[pick_t(rng)];
    TripleLabel u = units[pick_u(rng)];
    i64 target = stable_value(t, u);
    i64 tail = -1;
    bool settled = false;
    for (i64 k = 0; k <= 12; ++k) {
      i64 c = static_cast<i64>(enumerate_fiber(t + k * u).size());
      if (c == target && !settled) settled = true;
      if (c != target && settled) settled = false;
      tail = c;
    }
    if (!settled || tail != target) {
      std::ostringstream os;
      os << "t=" << format_triple(t) << " u=" << format_triple(u)
         << " stable_value=" << target << " tail=" << tail;
      report(9, "stability", false, os.str());
      return;
    }
  }
  report(9, "stability", true,
         "c(t+ku) settles to the min-formula value on 50 random pairs");
}

void criterion_10() {
  // The LR symmetry group is the direct product of the 144-element group
  // with the two-element group generated by the delta involution.
  const i64 computed = 2 * static_cast<i64>(symmetry_group().order(Group::kG));
  bool ok = computed == 288 && kLRSymmetryOrder == 288;
  std::string detail = "order != 288";
  if (ok) {
    auto parts = partitions_max_first(4);
    for (const auto& lambda : parts) {
      for (const auto& mu : parts) {
        i64 size = lambda[0] + lambda[1] + lambda[2] + mu[0] + mu[1] + mu[2];
        for (const auto& nu : parts) {
          if (nu[0] + nu[1] + nu[2] != size) continue;
          GLTriple g;
          g.lambda = lambda;
          g.mu = mu;
          g.nu = nu;
          if (lr_coefficient(g) != lr_coefficient(delta_involution(g))) {
            ok = false;
            detail = "delta involution changes lr at g=" + format_gl(g);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  if (ok) detail = "order 288; delta involution preserves lr on the sweep";
  report(10, "LR symmetry order", ok, detail);
}

void criterion_11(const std::vector<TripleLabel>& sweep) {
  for (const TripleLabel& t : sweep) {
    if (!in_cone(t)) continue;
    if (multiplicity_via_min(t) != triple_multiplicity(t)) {
      report(11, "formula equivalence", false, "t=" + format_triple(t));
      return;
    }
  }
  report(11, "formula equivalence", true,
         "min formula equals the closed form on all cone lattice points");
}

void criterion_12() {
  for (i64 l = 0; l <= 20; ++l)
    for (i64 m = 0; m <= 20; ++m)
      for (i64 n = 0; n <= 20; ++n) {
        i64 s = l + m - n;
        i64 direct = 0;
        if (s % 2 == 0) {
          i64 x = s / 2;
          direct = (x >= 0 && x <= l && x <= m) ? 1 : 0;
        }
        if (su2_multiplicity(l, m, n) != direct) {
          std::ostringstream os;
          os << "l=" << l << " m=" << m << " n=" << n;
          report(12, "SU(2)", false, os.str());
          return;
        }
      }
  report(12, "SU(2)", true,
         "parity + triangle form equals the integer count for labels <= 20");
}

}  // namespace

int main() {
  std::vector<TripleLabel> sweep = lattice_sweep(6);
  criterion_1(sweep);
  criterion_2();
  criterion_3(sweep);
  criterion_4();
  criterion_5(sweep);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11(sweep);
  criterion_12();
  if (failures == 0)
    std::printf("all 12 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
