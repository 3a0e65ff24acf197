#pragma once

// The chamber complex of the label cone: 294 cells encoded as subsets of the
// nine-condition alphabet {C1,C2,C3,D1,D3,D5,LT,RT,STAR}.
//
// Condition X holds at t (inside the cone) when:
//   C_i : min_p f_p(t) = f_i(t)
//   D1  : max_q g_q(t) = max(g1, g4)     (opposite hexagon pair {1,4})
//   D3  : max_q g_q(t) = max(g3, g6)
//   D5  : max_q g_q(t) = max(g5, g2)
//   LT  : max_q g_q(t) = max(g2, g4, g6) (even triple; holds iff omega <= 0)
//   RT  : max_q g_q(t) = max(g1, g3, g5) (odd triple;  holds iff omega >= 0)
//   STAR: min_p f_p(t) = max_q g_q(t)
//
// Each ray generator fails exactly its own condition. A cell is identified
// by its "absent" set: the conditions failing somewhere on it, equal to the
// set of rays it contains; its dimension is the size of that set. Valid
// absent sets are those containing none of {C1,C2,C3}, {D1,D3,D5}, {LT,RT}
// entirely.

#include <optional>
#include <string>
#include <vector>

#include "core/forms.hpp"
#include "core/rays.hpp"
#include "core/types.hpp"

namespace su3 {

struct Cell {
  // Bit r set <=> ray r is contained in the cell (condition r fails on it).
  std::uint16_t mask = 0;

  bool contains_ray(Ray r) const { return (mask >> r) & 1; }
  int dim() const { return __builtin_popcount(mask); }
  bool valid() const;

  // Presence bitmask over the fixed order C1,C2,C3,D1,D3,D5,LT,RT,STAR.
  std::string bitmask() const;
  static std::optional<Cell> from_bitmask(std::string_view s);
  // Comma-separated ray names, e.g. "C3,D3,LT".
  std::vector<std::string> absent_names() const;
  static std::optional<Cell> from_names(std::string_view csv);

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Truth of condition `cond` at t. Requires t in the cone; throws
// std::domain_error otherwise.
bool holds(Ray cond, const TripleLabel& t);
bool holds(Ray cond, const Forms& fo);

// The unique open cell containing t (absent = conditions failing at t).
// Requires t in the cone; throws std::domain_error otherwise.
Cell locate(const TripleLabel& t);

// Chamber decode: C(i,j) is cut out by conditions {C_i, D_j', w_j} with
// j' = j and w = RT for odd j; j' in {5,1,3} for j in {2,4,6} and w = LT.
struct Chamber {
  int i = 0;  // 1..3
  int j = 0;  // 1..6
  std::array<Ray, 3> defining{};  // {C_i, D_j', w_j}
  Cell cell;                      // absent = complement of defining
};

const std::array<Chamber, 18>& chambers();

// Chamber lookup from a cell; nullopt when the cell is not 6-dimensional.
std::optional<Chamber> chamber_of(const Cell& c);

// Closed-chamber membership: all three defining conditions hold at t.
bool in_chamber(const TripleLabel& t, int i, int j);

// All 294 cells, ordered by (dimension, bitmask). The per-dimension counts
// are (1, 9, 35, 75, 93, 63, 18).
const std::vector<Cell>& cells();

// Number of cells of each dimension 0..6.
std::array<int, 7> cell_counts();

// a is a face of b iff a.absent is a subset of b.absent.
bool face_relation(const Cell& a, const Cell& b);

// Fixed-width ASCII diagram (items of the contained rays drawn, the rest
// dotted) followed by the presence bitmask line.
std::string render_diagram(const Cell& c);

}  // namespace su3
