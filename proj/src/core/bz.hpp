#pragma once

// Labellings of the 9-vertex BZ graph: three corner labels y1..y3 and six
// hexagon labels z1..z6 subject to the hexagon relation
//
//     z1 - z4 = z5 - z2 = z3 - z6        (common value -omega)
//
// A BZ triangle is such a labelling with all nine labels nonnegative. The
// projection onto triple labels sums each corner label with a neighbouring
// hexagon label; the triple multiplicity is the fiber cardinality.

#include <map>
#include <vector>

#include "core/forms.hpp"
#include "core/rays.hpp"
#include "core/types.hpp"

namespace su3 {

struct BZLabelling {
  std::array<i64, 3> y{};
  std::array<i64, 6> z{};

  bool hexagon_ok() const {
    return z[0] - z[3] == z[4] - z[1] && z[0] - z[3] == z[2] - z[5];
  }
  bool nonnegative() const;
  i64 omega() const { return z[3] - z[0]; }

  friend bool operator==(const BZLabelling&, const BZLabelling&) = default;
  friend auto operator<=>(const BZLabelling& a, const BZLabelling& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
};

// Textual form: y1,y2,y3/z1,z2,z3,z4,z5,z6
std::string format_bz(const BZLabelling& b);
std::optional<BZLabelling> parse_bz(std::string_view s);

// The labelling with y_i = f_i(t) - x and z_j = x - g_j(t). Integral (and
// defined here) only for lattice t; throws std::domain_error otherwise.
BZLabelling bz_of(const TripleLabel& t, i64 x);

// Projection: l1 = y2+z4, l2 = y3+z5, m1 = y3+z6, m2 = y1+z1, n1 = y1+z2,
// n2 = y2+z3. Lands in the mod-3 lattice for integral labellings.
TripleLabel project(const BZLabelling& b);

enum class FiberMode {
  kScan,        // integer x in [max g(t), min f(t)], labelling bz_of(t, x)
  kExhaustive,  // search over corner labels, hexagon + projection checked
};

// All BZ triangles projecting to t, in increasing y1 order (equivalently
// decreasing x). Empty when t is not in the lattice or the fiber is empty.
// Throws std::length_error if the fiber exceeds the cap (counting paths are
// unaffected; use triple_multiplicity for sizes).
std::vector<BZLabelling> enumerate_fiber(const TripleLabel& t,
                                         FiberMode mode = FiberMode::kScan,
                                         std::size_t cap = (1u << 20));

// Fiber cardinality by exhaustive search (no linear forms involved).
i64 fiber_count_exhaustive(const TripleLabel& t);

// The eight minimal ray generators of the BZ cone, keyed by the ray their
// projection generates. STAR has no fundamental triangle (throws).
BZLabelling fundamental_triangle(Ray r);

// Coefficients of a nonnegative hexagon-compatible labelling over the eight
// fundamental triangles (STAR coefficient always 0). Coefficients are linear
// in b, so a rational point may be passed scaled by its denominator and the
// coefficients read over the same denominator. The omega >= 0 branch places
// the surplus on LT, the omega <= 0 branch on RT; integral input yields
// integral coefficients.
// Throws std::domain_error if b violates hexagon or nonnegativity.
std::array<i64, kNumRays> decompose(const BZLabelling& b);

// Inverse of decompose: sum of coeff[r] * fundamental_triangle(r).
BZLabelling recompose(const std::array<i64, kNumRays>& coeff);

}  // namespace su3
