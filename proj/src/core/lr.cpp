#include "core/lr.hpp"

#include <stdexcept>
#include <vector>

#include "core/multiplicity.hpp"

namespace su3 {

i64 lr_coefficient(const GLTriple& g) {
  if (!g.weakly_decreasing())
    throw std::domain_error("lr_coefficient: label not weakly decreasing");
  if (!g.size_balanced()) return 0;
  return triple_multiplicity(gl_to_su(g));
}

namespace {

struct TableauSearch {
  const GLTriple& g;
  // remaining[e]: how many entries e+1 may still be placed.
  std::array<i64, 3> remaining{};
  // count[e]: entries e+1 placed so far in the reverse reading word.
  std::array<i64, 3> count{};
  // grid[r][c]: entry at row r, column c (0 = empty), columns up to nu[0].
  std::vector<std::array<int, 3>> grid;
  i64 found = 0;

  explicit TableauSearch(const GLTriple& gl) : g(gl) {
    for (int e = 0; e < 3; ++e) remaining[e] = g.mu[e];
    grid.assign(static_cast<std::size_t>(g.nu[0] > 0 ? g.nu[0] : 0), {});
  }

  bool in_shape(int r, i64 c) const {
    return r >= 0 && r < 3 && c >= g.lambda[r] && c < g.nu[r];
  }

  // Cells are visited in reverse reading order: each row right-to-left,
  // rows top to bottom. This makes the lattice-word prefix condition
  // checkable at placement time.
  void fill(int r, i64 c) {
    while (r < 3 && (g.nu[r] == g.lambda[r] || c < g.lambda[r])) {
      ++r;
      c = r < 3 ? g.nu[r] - 1 : 0;
    }
    if (r == 3) {
      ++found;
      return;
    }
    for (int e = 1; e <= 3; ++e) {
      if (remaining[e - 1] == 0) continue;
      // Rows weakly increase left to right: entry <= right neighbour.
      if (c + 1 < g.nu[r] && grid[c + 1][r] != 0 && e > grid[c + 1][r])
        continue;
      // Columns strictly increase downwards.
      if (r > 0 && in_shape(r - 1, c) && e <= grid[c][r - 1]) continue;
      // Lattice word: every prefix has #1 >= #2 >= #3.
      if (e > 1 && count[e - 1] + 1 > count[e - 2]) continue;
      grid[c][r] = e;
      --remaining[e - 1];
      ++count[e - 1];
      if (c > g.lambda[r])
        fill(r, c - 1);
      else
        fill(r + 1, r + 1 < 3 ? g.nu[r + 1] - 1 : 0);
      grid[c][r] = 0;
      ++remaining[e - 1];
      --count[e - 1];
    }
  }
};

}  // namespace

i64 lr_tableau_oracle(const GLTriple& g) {
  if (!g.weakly_decreasing() || g.lambda[2] < 0 || g.mu[2] < 0 || g.nu[2] < 0)
    throw std::domain_error("lr_tableau_oracle: labels must be partitions");
  if (g.nu[0] > 100000)
    throw std::length_error("lr_tableau_oracle: shape too large for exhaustive search");
  for (int r = 0; r < 3; ++r)
    if (g.lambda[r] > g.nu[r]) return 0;  // lambda not contained in nu
  if (!g.size_balanced()) return 0;       // content cannot fill the shape
  TableauSearch search(g);
  search.fill(0, g.nu[0] - 1);
  return search.found;
}

i64 lr_oracle_normalized(const GLTriple& g) {
  if (!g.weakly_decreasing())
    throw std::domain_error("lr_oracle_normalized: label not weakly decreasing");
  GLTriple h = g;
  const i64 a = g.lambda[2], b = g.mu[2];
  for (int r = 0; r < 3; ++r) {
    h.lambda[r] -= a;
    h.mu[r] -= b;
    h.nu[r] -= a + b;
  }
  if (h.nu[2] < 0) return 0;  // W_nu not polynomial after the twist
  return lr_tableau_oracle(h);
}

GLTriple delta_involution(const GLTriple& g) {
  const i64 d = g.delta();
  GLTriple h = g;
  for (int r = 0; r < 3; ++r) {
    h.lambda[r] -= d;
    h.mu[r] += d;
  }
  return h;
}

}  // namespace su3
