#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "core/bz.hpp"
#include "core/multiplicity.hpp"
#include "core/symmetry.hpp"
#include "core/verify.hpp"

using namespace su3;

TEST_CASE("group orders") {
  const SymmetryGroup& g = symmetry_group();
  CHECK(g.order(Group::kG) == 144);
  CHECK(g.order(Group::kGg) == 12);
  CHECK(g.order(Group::kGl) == 72);
  CHECK(g.order(Group::kGlg) == 6);
}

TEST_CASE("identity and named generators") {
  const SymmetryGroup& g = symmetry_group();
  RayPermutation id;
  for (int r = 0; r < kNumRays; ++r) id.img[r] = static_cast<std::uint8_t>(r);
  int id_index = g.find(id);
  REQUIRE(id_index >= 0);
  CHECK(g.element(id_index).mat == Mat6::identity());

  // Duality: the coordinate swap within each pair; swaps the C and D sets
  // and LT with RT.
  const Symmetry& dual_sym = g.element(g.duality_index());
  Mat6 expect;
  for (int s = 0; s < 3; ++s) {
    expect.at3(2 * s, 2 * s + 1) = 3;
    expect.at3(2 * s + 1, 2 * s) = 3;
  }
  CHECK(dual_sym.mat == expect);
  CHECK(dual_sym.perm.img[kC1] == kD3);
  CHECK(dual_sym.perm.img[kC2] == kD5);
  CHECK(dual_sym.perm.img[kC3] == kD1);
  CHECK(dual_sym.perm.img[kLT] == kRT);

  // l<->m swaps the C and D sets but fixes the triangles.
  const Symmetry& lm = g.element(g.swap_lm_index());
  CHECK(lm.perm.img[kC1] == kD5);
  CHECK(lm.perm.img[kC2] == kD3);
  CHECK(lm.perm.img[kC3] == kD1);
  CHECK(lm.perm.img[kLT] == kLT);

  // s1 swaps C1<->C2, D3<->D5, LT<->RT; s2 swaps C2<->C3, D5<->D1, LT<->RT.
  const Symmetry& s1 = g.element(g.s1_index());
  CHECK(s1.perm.img[kC1] == kC2);
  CHECK(s1.perm.img[kD3] == kD5);
  CHECK(s1.perm.img[kD1] == kD1);
  CHECK(s1.perm.img[kLT] == kRT);
  const Symmetry& s2 = g.element(g.s2_index());
  CHECK(s2.perm.img[kC2] == kC3);
  CHECK(s2.perm.img[kD5] == kD1);
  CHECK(s2.perm.img[kLT] == kRT);
}

TEST_CASE("matrix realization properties") {
  const SymmetryGroup& g = symmetry_group();
  int integral = 0;
  for (const Symmetry& s : g.all()) {
    // Permutes all nine ray generators correctly.
    for (int r = 0; r < kNumRays; ++r)
      CHECK(s.mat.apply(ray_generator(static_cast<Ray>(r))) ==
            ray_generator(static_cast<Ray>(s.perm.img[r])));
    CHECK(std::abs(det_num(s.mat)) == 729);  // |det M| = 1
    CHECK(s.mat * g.element(s.inverse).mat == Mat6::identity());
    // Lattice preservation on a spanning set of the mod-3 lattice.
    for (int r = 0; r < kNumRays; ++r) {
      TripleLabel image = s.mat.apply(ray_generator(static_cast<Ray>(r)));
      CHECK(in_lattice(image));
    }
    integral += s.mat.integral();
  }
  // Exactly the twelve general symmetries act integrally on Z^6.
  CHECK(integral == 12);
  for (int idx : g.members(Group::kGg)) CHECK(g.element(idx).mat.integral());
}

TEST_CASE("the pure triangle swap acts by an omega shear") {
  // LT <-> RT with all other rays fixed: t |-> t + omega(t) (r_RT - r_LT).
  const SymmetryGroup& g = symmetry_group();
  RayPermutation p;
  for (int r = 0; r < kNumRays; ++r) p.img[r] = static_cast<std::uint8_t>(r);
  p.img[kLT] = kRT;
  p.img[kRT] = kLT;
  int idx = g.find(p);
  REQUIRE(idx >= 0);
  Mat6 expect;
  const i64 w[6] = {1, -1, 1, -1, 1, -1};
  const i64 shift[6] = {-1, 1, -1, 1, -1, 1};  // r_RT - r_LT
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      expect.at3(r, c) = (r == c ? 3 : 0) + shift[r] * w[c];
  CHECK(g.element(idx).mat == expect);
  CHECK_FALSE(g.element(idx).mat.integral());
}

TEST_CASE("closure under composition") {
  const SymmetryGroup& g = symmetry_group();
  for (int a = 0; a < 144; ++a)
    for (int b = 0; b < 144; ++b) {
      int c = g.compose(a, b);
      REQUIRE(c >= 0);
      CHECK(g.element(c).mat == g.element(a).mat * g.element(b).mat);
    }
}

TEST_CASE("subgroup structure") {
  const SymmetryGroup& g = symmetry_group();
  // Glg = Gl intersect Gg as matrix sets.
  std::set<int> gl(g.members(Group::kGl).begin(), g.members(Group::kGl).end());
  std::set<int> gg(g.members(Group::kGg).begin(), g.members(Group::kGg).end());
  std::set<int> expected;
  for (int idx : gl)
    if (gg.count(idx)) expected.insert(idx);
  std::set<int> glg(g.members(Group::kGlg).begin(), g.members(Group::kGlg).end());
  CHECK(glg == expected);
  CHECK(glg.count(g.s1_index()) == 1);
  CHECK(glg.count(g.s2_index()) == 1);

  // Glg is generated by s1 and s2.
  std::set<int> generated = {g.find(RayPermutation{{0, 1, 2, 3, 4, 5, 6, 7, 8}})};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = generated;
    for (int x : generated) {
      for (int gen : {g.s1_index(), g.s2_index()}) {
        next.insert(g.compose(gen, x));
      }
    }
    if (next != generated) {
      generated = next;
      grew = true;
    }
  }
  CHECK(generated == glg);
}

TEST_CASE("element order histogram certifies the wreath-product profile") {
  // Expected profile of S2 x (S3 wr S2), derived by direct counting:
  // inside S3 wr S2, non-swap pairs contribute orders {1:1, 2:15, 3:8, 6:12}
  // and swap elements square to (ab, ba), giving {2:6, 4:18, 6:12}; crossing
  // with the central involution doubles odd orders. Net: 1,43,8,36,56 for
  // orders 1,2,3,4,6.
  const SymmetryGroup& g = symmetry_group();
  std::map<int, int> histogram;
  RayPermutation id;
  for (int r = 0; r < kNumRays; ++r) id.img[r] = static_cast<std::uint8_t>(r);
  const int id_index = g.find(id);
  for (const Symmetry& s : g.all()) {
    int order = 1, cur = s.index;
    while (cur != id_index) {
      cur = g.compose(s.index, cur);
      ++order;
      REQUIRE(order <= 144);
    }
    histogram[order]++;
  }
  std::map<int, int> expected = {{1, 1}, {2, 43}, {3, 8}, {4, 36}, {6, 56}};
  CHECK(histogram == expected);
}

TEST_CASE("exactly the set-preserving elements lift") {
  const SymmetryGroup& g = symmetry_group();
  int liftable = 0;
  for (const Symmetry& s : g.all()) {
    auto lift = g.lift(s.index);
    bool in_gl = std::binary_search(g.members(Group::kGl).begin(),
                                    g.members(Group::kGl).end(), s.index);
    CHECK(lift.has_value() == in_gl);
    if (lift) ++liftable;
  }
  CHECK(liftable == 72);
  CHECK_FALSE(g.lift(g.duality_index()).has_value());
  CHECK_FALSE(g.lift(g.swap_lm_index()).has_value());
  CHECK(g.lift(g.s1_index()).has_value());
}

TEST_CASE("lifts commute with the projection") {
  const SymmetryGroup& g = symmetry_group();
  // Sample of BZ triangles with labels <= 3.
  std::vector<BZLabelling> samples;
  for (const TripleLabel& t : lattice_sweep(3))
    for (const BZLabelling& b : enumerate_fiber(t))
      if (samples.size() < 400) samples.push_back(b);
  for (int idx : g.members(Group::kGl)) {
    auto lift = g.lift(idx);
    REQUIRE(lift.has_value());
    const Mat6& m = g.element(idx).mat;
    // Fundamental triangles map according to the ray permutation.
    for (int r = 0; r < kNumRays - 1; ++r) {
      BZLabelling image = lift->apply(fundamental_triangle(static_cast<Ray>(r)));
      CHECK(image ==
            fundamental_triangle(static_cast<Ray>(g.element(idx).perm.img[r])));
    }
    for (const BZLabelling& b : samples) {
      BZLabelling image = lift->apply(b);
      CHECK(image.hexagon_ok());
      CHECK(image.nonnegative());
      CHECK(project(image) == m.apply(project(b)));
    }
  }
}

TEST_CASE("action on cells") {
  const SymmetryGroup& g = symmetry_group();
  Cell zero{0};
  Cell star{static_cast<std::uint16_t>(1 << kStar)};
  for (const Symmetry& s : g.all()) {
    CHECK(g.act_on_cell(s.index, zero) == zero);
    CHECK(g.act_on_cell(s.index, star) == star);
  }
  // Compatible with locate on cone points.
  for (const TripleLabel& t : lattice_sweep(2)) {
    if (!in_cone(t)) continue;
    Cell c = locate(t);
    for (int idx = 0; idx < 144; idx += 11) {
      TripleLabel image = symmetry_group().element(idx).mat.apply(t);
      CHECK(locate(image) == g.act_on_cell(idx, c));
    }
  }
}

TEST_CASE("orbit sizes of the reference 3-cell") {
  const SymmetryGroup& g = symmetry_group();
  auto cell = Cell::from_names("C3,D3,LT");
  REQUIRE(cell.has_value());
  CHECK(g.orbit(Group::kGlg, *cell).size() == 6);
  CHECK(g.orbit(Group::kGg, *cell).size() == 6);
  CHECK(g.orbit(Group::kGl, *cell).size() == 18);
  CHECK(g.orbit(Group::kG, *cell).size() == 18);

  // The six cells alternate the triangle while walking the (C,D) pairs.
  std::set<std::string> masks;
  for (const Cell& c : g.orbit(Group::kGlg, *cell)) masks.insert(c.bitmask());
  std::set<std::string> expected = {
      "001010100",  // C3 D3 LT
      "010010010",  // C2 D3 RT
      "100001100",  // C1 D5 LT
      "100100010",  // C1 D1 RT
      "010100100",  // C2 D1 LT
      "001001010",  // C3 D5 RT
  };
  CHECK(masks == expected);

  // The Gl orbit covers every (C, D, triangle) combination.
  std::set<std::string> gl_masks;
  for (const Cell& c : g.orbit(Group::kGl, *cell)) gl_masks.insert(c.bitmask());
  CHECK(gl_masks.size() == 18);
  for (int ci = 0; ci < 3; ++ci)
    for (int di = 0; di < 3; ++di)
      for (int tri = 0; tri < 2; ++tri) {
        Cell want;
        want.mask = static_cast<std::uint16_t>(
            (1 << (kC1 + ci)) | (1 << (kD1 + di)) | (1 << (kLT + tri)));
        CHECK(gl_masks.count(want.bitmask()) == 1);
      }
}

TEST_CASE("Gl acts transitively on the chambers") {
  const SymmetryGroup& g = symmetry_group();
  auto orbit = g.orbit(Group::kGl, chambers()[0].cell);
  CHECK(orbit.size() == 18);
  std::set<std::uint16_t> masks;
  for (const Cell& c : orbit) masks.insert(c.mask);
  for (const Chamber& ch : chambers()) CHECK(masks.count(ch.cell.mask) == 1);
}

TEST_CASE("multiplicity invariance across the whole group") {
  const SymmetryGroup& g = symmetry_group();
  for (const TripleLabel& t : lattice_sweep(2)) {
    i64 c = triple_multiplicity(t);
    for (const Symmetry& s : g.all())
      CHECK(triple_multiplicity(s.mat.apply(t)) == c);
  }
}
