#include "core/symmetry.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace su3 {

namespace {

constexpr std::array<int, 3> kCSet = {kC1, kC2, kC3};
constexpr std::array<int, 3> kDSet = {kD1, kD3, kD5};

bool in_set(int r, const std::array<int, 3>& s) {
  return r == s[0] || r == s[1] || r == s[2];
}

// Determinant of an n x n integer matrix (n <= 6), Bareiss elimination.
i64 det_small(int n, i64 m[6][6]) {
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m[k][c], m[p][c]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

i64 perm_key(const RayPermutation& p) {
  i64 key = 0;
  for (int r = 0; r < kNumRays; ++r) key = key * kNumRays + p.img[r];
  return key;
}

}  // namespace

bool RayPermutation::admissible() const {
  std::array<bool, kNumRays> seen{};
  for (int r = 0; r < kNumRays; ++r) {
    if (img[r] >= kNumRays || seen[img[r]]) return false;
    seen[img[r]] = true;
  }
  if (img[kStar] != kStar) return false;
  if (!(img[kLT] == kLT || img[kLT] == kRT)) return false;
  if (!(img[kRT] == kLT || img[kRT] == kRT)) return false;
  // The C and D triples map onto the C and D triples, either each to itself
  // or swapped.
  const bool c_to_c = in_set(img[kC1], kCSet);
  for (int k = 0; k < 3; ++k) {
    const bool ck_ok = c_to_c ? in_set(img[kCSet[k]], kCSet)
                              : in_set(img[kCSet[k]], kDSet);
    const bool dk_ok = c_to_c ? in_set(img[kDSet[k]], kDSet)
                              : in_set(img[kDSet[k]], kCSet);
    if (!ck_ok || !dk_ok) return false;
  }
  return true;
}

bool Mat6::integral() const {
  for (i64 e : num)
    if (e % 3 != 0) return false;
  return true;
}

Vec6 Mat6::apply(const Vec6& v) const {
  Vec6 out{};
  for (int r = 0; r < 6; ++r) {
    i64 s = 0;
    for (int c = 0; c < 6; ++c) s += at3(r, c) * v[c];
    if (s % 3 != 0)
      throw std::domain_error("Mat6::apply: image not integral");
    out[r] = s / 3;
  }
  return out;
}

Mat6 Mat6::identity() {
  Mat6 m;
  for (int r = 0; r < 6; ++r) m.at3(r, r) = 3;
  return m;
}

Mat6 operator*(const Mat6& x, const Mat6& y) {
  Mat6 out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      i64 s = 0;
      for (int k = 0; k < 6; ++k) s += x.at3(r, k) * y.at3(k, c);
      if (s % 3 != 0)
        throw std::logic_error("Mat6: product leaves the denominator-3 grid");
      out.at3(r, c) = s / 3;
    }
  return out;
}

i64 det_num(const Mat6& m) {
  i64 a[6][6];
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) a[r][c] = m.at3(r, c);
  return det_small(6, a);
}

BZLabelling BZSymmetry::apply(const BZLabelling& b) const {
  BZLabelling out;
  for (int i = 0; i < 3; ++i) out.y[y_perm[i]] = b.y[i];
  for (int j = 0; j < 6; ++j) out.z[z_perm[j]] = b.z[j];
  return out;
}

Mat6 realize_matrix(const RayPermutation& p) {
  if (!p.admissible())
    throw std::domain_error("realize_matrix: inadmissible ray permutation");
  // Lattice basis of rays (index-3 sublattice of Z^6, determinant +-3).
  constexpr std::array<int, 6> basis = {kC1, kC2, kC3, kD1, kD3, kLT};
  i64 B[6][6];
  for (int r = 0; r < 6; ++r)
    for (int k = 0; k < 6; ++k) B[r][k] = kRayVectors[basis[k]][r];

  i64 Bcopy[6][6];
  std::copy(&B[0][0], &B[0][0] + 36, &Bcopy[0][0]);
  const i64 det = det_small(6, Bcopy);
  if (det == 0) throw std::logic_error("realize_matrix: singular ray basis");

  // Adjugate so that B * adj = det * I.
  i64 adj[6][6];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      i64 minor[6][6];
      int mr = 0;
      for (int r = 0; r < 6; ++r) {
        if (r == i) continue;
        int mc = 0;
        for (int c = 0; c < 6; ++c) {
          if (c == j) continue;
          minor[mr][mc++] = B[r][c];
        }
        ++mr;
      }
      i64 cof = det_small(5, minor);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }

  if (det != 3 && det != -3)
    throw std::logic_error("realize_matrix: ray basis determinant not +-3");

  i64 T[6][6];
  for (int r = 0; r < 6; ++r)
    for (int k = 0; k < 6; ++k) T[r][k] = kRayVectors[p.img[basis[k]]][r];

  // M = T adj(B) / det; stored scaled by 3, so the entries are exactly
  // +-(T adj(B)) with no division remainder.
  Mat6 m;
  const i64 sign = det > 0 ? 1 : -1;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      i64 s = 0;
      for (int k = 0; k < 6; ++k) s += T[r][k] * adj[k][c];
      m.at3(r, c) = sign * s;
    }

  // The three dependent rays pin consistency; check all nine.
  for (int x = 0; x < kNumRays; ++x)
    if (m.apply(kRayVectors[x]) != kRayVectors[p.img[x]])
      throw std::logic_error("realize_matrix: permutation not realized on rays");

  i64 dm = det_num(m);
  if (dm != 729 && dm != -729)
    throw std::logic_error("realize_matrix: matrix not unimodular");
  return m;
}

SymmetryGroup::SymmetryGroup() {
  elems_.reserve(144);
  std::array<int, 3> cs = {kC1, kC2, kC3}, ds = {kD1, kD3, kD5};
  for (int swap_cd = 0; swap_cd < 2; ++swap_cd) {
    std::array<int, 3> c_img = swap_cd ? ds : cs;
    std::sort(c_img.begin(), c_img.end());
    do {
      std::array<int, 3> d_img = swap_cd ? cs : ds;
      std::sort(d_img.begin(), d_img.end());
      do {
        for (int flip = 0; flip < 2; ++flip) {
          RayPermutation p;
          for (int k = 0; k < 3; ++k) {
            p.img[kCSet[k]] = static_cast<std::uint8_t>(c_img[k]);
            p.img[kDSet[k]] = static_cast<std::uint8_t>(d_img[k]);
          }
          p.img[kLT] = flip ? kRT : kLT;
          p.img[kRT] = flip ? kLT : kRT;
          p.img[kStar] = kStar;
          Symmetry s;
          s.perm = p;
          s.mat = realize_matrix(p);
          s.index = static_cast<int>(elems_.size());
          elems_.push_back(s);
        }
      } while (std::next_permutation(d_img.begin(), d_img.end()));
    } while (std::next_permutation(c_img.begin(), c_img.end()));
  }
  if (elems_.size() != 144)
    throw std::logic_error("SymmetryGroup: expected 144 elements");

  for (Symmetry& s : elems_) {
    RayPermutation inv;
    for (int r = 0; r < kNumRays; ++r) inv.img[s.perm.img[r]] = static_cast<std::uint8_t>(r);
    s.inverse = find(inv);
    if (s.inverse < 0) throw std::logic_error("SymmetryGroup: inverse missing");
  }

  g_.resize(elems_.size());
  for (std::size_t k = 0; k < elems_.size(); ++k) g_[k] = static_cast<int>(k);

  for (const Symmetry& s : elems_)
    if (in_set(s.perm.img[kC1], kCSet)) gl_.push_back(s.index);

  // The twelve general symmetries: label permutations and duality, built
  // directly as coordinate matrices and located in the enumeration.
  Mat6 dual_mat;
  for (int slot = 0; slot < 3; ++slot) {
    dual_mat.at3(2 * slot, 2 * slot + 1) = 3;
    dual_mat.at3(2 * slot + 1, 2 * slot) = 3;
  }
  std::array<int, 3> sigma = {0, 1, 2};
  do {
    Mat6 pm;
    for (int slot = 0; slot < 3; ++slot) {
      pm.at3(2 * slot, 2 * sigma[slot]) = 3;
      pm.at3(2 * slot + 1, 2 * sigma[slot] + 1) = 3;
    }
    for (int dualize = 0; dualize < 2; ++dualize) {
      Mat6 m = dualize ? pm * dual_mat : pm;
      int idx = find_matrix(m);
      if (idx < 0) throw std::logic_error("SymmetryGroup: general symmetry missing");
      gg_.push_back(idx);
      if (sigma == std::array<int, 3>{0, 1, 2} && dualize) duality_ = idx;
      if (sigma == std::array<int, 3>{1, 0, 2} && !dualize) swap_lm_ = idx;
      if (sigma == std::array<int, 3>{1, 0, 2} && dualize) s1_ = idx;
      if (sigma == std::array<int, 3>{0, 2, 1} && dualize) s2_ = idx;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(gg_.begin(), gg_.end());

  std::set_intersection(gl_.begin(), gl_.end(), gg_.begin(), gg_.end(),
                        std::back_inserter(glg_));
}

const std::vector<int>& SymmetryGroup::members(Group which) const {
  switch (which) {
    case Group::kG: return g_;
    case Group::kGg: return gg_;
    case Group::kGl: return gl_;
    case Group::kGlg: return glg_;
  }
  throw std::invalid_argument("members: unknown group");
}

int SymmetryGroup::find(const RayPermutation& p) const {
  for (const Symmetry& s : elems_)
    if (perm_key(s.perm) == perm_key(p)) return s.index;
  return -1;
}

int SymmetryGroup::find_matrix(const Mat6& m) const {
  for (const Symmetry& s : elems_)
    if (s.mat == m) return s.index;
  return -1;
}

int SymmetryGroup::compose(int a, int b) const {
  RayPermutation p;
  for (int r = 0; r < kNumRays; ++r)
    p.img[r] = elems_[a].perm.img[elems_[b].perm.img[r]];
  return find(p);
}

bool SymmetryGroup::liftable(int index) const {
  return in_set(elems_[index].perm.img[kC1], kCSet);
}

std::optional<BZSymmetry> SymmetryGroup::lift(int index) const {
  if (!liftable(index)) return std::nullopt;
  const RayPermutation& p = elems_[index].perm;
  BZSymmetry s;
  for (int k = 0; k < 3; ++k)
    s.y_perm[k] = static_cast<std::uint8_t>(p.img[kCSet[k]] - kC1);

  // z indices 0..5 carry z1..z6; opposite hexagon pairs belong to the D
  // triangles and the parity classes to RT (odd) / LT (even).
  auto pair_of = [](int d) -> std::array<int, 2> {
    switch (d) {
      case kD1: return {0, 3};
      case kD3: return {2, 5};
      case kD5: return {4, 1};
    }
    throw std::logic_error("lift: not a D ray");
  };
  const bool parity_preserving = p.img[kRT] == kRT;
  for (int rot = 0; rot < 6; ++rot) {
    for (int refl = 0; refl < 2; ++refl) {
      std::array<std::uint8_t, 6> z;
      for (int j = 0; j < 6; ++j)
        z[j] = static_cast<std::uint8_t>(refl ? ((rot - j) % 6 + 6) % 6
                                              : (j + rot) % 6);
      auto maps_pair = [&](int d_from, int d_to) {
        auto a = pair_of(d_from), b = pair_of(d_to);
        std::array<int, 2> img = {z[a[0]], z[a[1]]};
        return (img[0] == b[0] && img[1] == b[1]) ||
               (img[0] == b[1] && img[1] == b[0]);
      };
      bool ok = maps_pair(kD1, p.img[kD1]) && maps_pair(kD3, p.img[kD3]) &&
                maps_pair(kD5, p.img[kD5]);
      if (ok) {
        bool preserves = (z[0] % 2) == 0;  // image of an odd-class index
        ok = preserves == parity_preserving;
      }
      if (ok) {
        s.z_perm = z;
        return s;
      }
    }
  }
  throw std::logic_error("lift: no hexagon symmetry matches");
}

Cell SymmetryGroup::act_on_cell(int index, const Cell& c) const {
  const RayPermutation& p = elems_[index].perm;
  Cell out;
  for (int r = 0; r < kNumRays; ++r)
    if (c.contains_ray(static_cast<Ray>(r))) out.mask |= (1 << p.img[r]);
  return out;
}

std::vector<Cell> SymmetryGroup::orbit(Group which, const Cell& c) const {
  std::vector<Cell> queue = {c};
  std::vector<bool> seen(1 << kNumRays, false);
  seen[c.mask] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Cell cur = queue[head];
    for (int idx : members(which)) {
      Cell img = act_on_cell(idx, cur);
      if (!seen[img.mask]) {
        seen[img.mask] = true;
        queue.push_back(img);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

const SymmetryGroup& symmetry_group() {
  static const SymmetryGroup group;
  return group;
}

const char* group_name(Group g) {
  switch (g) {
    case Group::kG: return "G";
    case Group::kGg: return "Gg";
    case Group::kGl: return "Gl";
    case Group::kGlg: return "Glg";
  }
  return "?";
}

std::optional<Group> group_from_name(std::string_view s) {
  if (s == "G") return Group::kG;
  if (s == "Gg") return Group::kGg;
  if (s == "Gl") return Group::kGl;
  if (s == "Glg") return Group::kGlg;
  return std::nullopt;
}

}  // namespace su3
