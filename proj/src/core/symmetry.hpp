#pragma once

// The group of linear symmetries of the triple multiplicities, materialized
// as constrained permutations of the nine rays realized by unimodular 6x6
// integer matrices.
//
// Admissible ray permutations fix STAR, stabilize {LT,RT}, and stabilize or
// swap the sets {C1,C2,C3} and {D1,D3,D5}; there are 2 * (3!*3!) * 2 = 144
// of them and each admits exactly one matrix realization. The subgroup that
// stabilizes the C and D sets separately (order 72) consists of exactly the
// symmetries that lift to the BZ cone.

#include <optional>
#include <vector>

#include "core/bz.hpp"
#include "core/cells.hpp"
#include "core/rays.hpp"
#include "core/types.hpp"

namespace su3 {

struct RayPermutation {
  std::array<std::uint8_t, kNumRays> img{};  // img[STAR] == STAR

  bool admissible() const;
  friend bool operator==(const RayPermutation&, const RayPermutation&) = default;
};

// Automorphism of the mod-3 lattice in standard coordinates. Entries live in
// (1/3)Z and are stored scaled by 3; they are integers exactly for the twelve
// general symmetries. Application is exact on lattice points.
struct Mat6 {
  std::array<i64, 36> num{};  // row-major, value = num/3

  i64& at3(int r, int c) { return num[6 * r + c]; }
  i64 at3(int r, int c) const { return num[6 * r + c]; }
  bool integral() const;
  // Throws std::domain_error when the image is not integral (v outside the
  // mod-3 lattice under a non-integral matrix).
  Vec6 apply(const Vec6& v) const;
  TripleLabel apply(const TripleLabel& t) const {
    return TripleLabel{apply(t.v)};
  }
  static Mat6 identity();
  friend bool operator==(const Mat6&, const Mat6&) = default;
};

Mat6 operator*(const Mat6& x, const Mat6& y);

// det(3M); unimodularity of M means +-3^6 here.
i64 det_num(const Mat6& m);

// A hexagon symmetry on the z indices combined with a corner permutation:
// the lift of a set-preserving ray symmetry to the BZ cone. Application
// moves label y_i to position y_perm[i] and z_j to position z_perm[j].
struct BZSymmetry {
  std::array<std::uint8_t, 3> y_perm{};
  std::array<std::uint8_t, 6> z_perm{};

  BZLabelling apply(const BZLabelling& b) const;
};

struct Symmetry {
  RayPermutation perm;
  Mat6 mat;
  int index = -1;    // position in SymmetryGroup::all()
  int inverse = -1;  // index of the inverse element
};

// Solves for the unique linear map sending each ray generator to its image;
// the system is posed over the lattice basis {C1,C2,C3,D1,D3,LT} and the
// solution is verified on D5, RT and STAR. The result is a unimodular
// automorphism of the mod-3 lattice. Throws std::domain_error for an
// inadmissible permutation, std::logic_error if verification fails.
Mat6 realize_matrix(const RayPermutation& p);

enum class Group { kG, kGg, kGl, kGlg };

class SymmetryGroup {
 public:
  // Deterministic one-time construction: enumerate the 144 admissible
  // permutations, realize and verify each matrix.
  SymmetryGroup();

  const std::vector<Symmetry>& all() const { return elems_; }
  const std::vector<int>& members(Group which) const;
  std::size_t order(Group which) const { return members(which).size(); }

  const Symmetry& element(int index) const { return elems_[index]; }
  // Index of the element with the given permutation / matrix; -1 if absent.
  int find(const RayPermutation& p) const;
  int find_matrix(const Mat6& m) const;
  int compose(int a, int b) const;  // index of elems_[a] * elems_[b]

  // Whether the element lifts to a symmetry of the BZ cone, and the lift.
  bool liftable(int index) const;
  std::optional<BZSymmetry> lift(int index) const;

  Cell act_on_cell(int index, const Cell& c) const;
  std::vector<Cell> orbit(Group which, const Cell& c) const;

  // Named generators (indices into all()): the duality involution, the
  // label transposition l<->m, and the two order-3!-generating involutions
  // s1: (l;m;n)->(m*;l*;n*) and s2: (l;m;n)->(l*;n*;m*).
  int duality_index() const { return duality_; }
  int swap_lm_index() const { return swap_lm_; }
  int s1_index() const { return s1_; }
  int s2_index() const { return s2_; }

 private:
  std::vector<Symmetry> elems_;
  std::vector<int> g_, gg_, gl_, glg_;
  int duality_ = -1, swap_lm_ = -1, s1_ = -1, s2_ = -1;
};

// Shared read-only instance (construction is deterministic).
const SymmetryGroup& symmetry_group();

const char* group_name(Group g);
std::optional<Group> group_from_name(std::string_view s);

}  // namespace su3
