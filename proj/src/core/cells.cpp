#include "core/cells.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace su3 {

namespace {

constexpr std::uint16_t kCMask = (1 << kC1) | (1 << kC2) | (1 << kC3);
constexpr std::uint16_t kDMask = (1 << kD1) | (1 << kD3) | (1 << kD5);
constexpr std::uint16_t kTriMask = (1 << kLT) | (1 << kRT);

}  // namespace

int ray_from_name(std::string_view name) {
  for (int r = 0; r < kNumRays; ++r)
    if (name == kRayNames[r]) return r;
  return -1;
}

bool Cell::valid() const {
  if (mask >= (1 << kNumRays)) return false;
  if ((mask & kCMask) == kCMask) return false;
  if ((mask & kDMask) == kDMask) return false;
  if ((mask & kTriMask) == kTriMask) return false;
  return true;
}

std::string Cell::bitmask() const {
  std::string s(kNumRays, '0');
  for (int r = 0; r < kNumRays; ++r)
    if (contains_ray(static_cast<Ray>(r))) s[r] = '1';
  return s;
}

std::optional<Cell> Cell::from_bitmask(std::string_view s) {
  if (s.size() != kNumRays) return std::nullopt;
  Cell c;
  for (int r = 0; r < kNumRays; ++r) {
    if (s[r] == '1')
      c.mask |= (1 << r);
    else if (s[r] != '0')
      return std::nullopt;
  }
  if (!c.valid()) return std::nullopt;
  return c;
}

std::vector<std::string> Cell::absent_names() const {
  std::vector<std::string> names;
  for (int r = 0; r < kNumRays; ++r)
    if (contains_ray(static_cast<Ray>(r))) names.push_back(kRayNames[r]);
  return names;
}

std::optional<Cell> Cell::from_names(std::string_view csv) {
  Cell c;
  size_t start = 0;
  if (csv.empty()) return c;  // the {0} cell
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      int r = ray_from_name(csv.substr(start, i - start));
      if (r < 0) return std::nullopt;
      c.mask |= (1 << r);
      start = i + 1;
    }
  }
  if (!c.valid()) return std::nullopt;
  return c;
}

bool holds(Ray cond, const Forms& fo) {
  if (!in_cone(fo)) throw std::domain_error("holds: label outside the cone");
  const i64 minf = fo.min_f3();
  const i64 maxg = fo.max_g3();
  auto gmax_of = [&](std::initializer_list<int> idx) {
    i64 m = fo.g3[*idx.begin()];
    for (int q : idx) m = std::max(m, fo.g3[q]);
    return m;
  };
  switch (cond) {
    case kC1: return fo.f3[0] == minf;
    case kC2: return fo.f3[1] == minf;
    case kC3: return fo.f3[2] == minf;
    case kD1: return gmax_of({0, 3}) == maxg;
    case kD3: return gmax_of({2, 5}) == maxg;
    case kD5: return gmax_of({4, 1}) == maxg;
    case kLT: return gmax_of({1, 3, 5}) == maxg;  // g2,g4,g6
    case kRT: return gmax_of({0, 2, 4}) == maxg;  // g1,g3,g5
    case kStar: return minf == maxg;
  }
  throw std::invalid_argument("holds: unknown condition");
}

bool holds(Ray cond, const TripleLabel& t) { return holds(cond, eval_forms(t)); }

Cell locate(const TripleLabel& t) {
  Forms fo = eval_forms(t);
  if (!in_cone(fo)) throw std::domain_error("locate: label outside the cone");
  Cell c;
  for (int r = 0; r < kNumRays; ++r)
    if (!holds(static_cast<Ray>(r), fo)) c.mask |= (1 << r);
  return c;
}

const std::array<Chamber, 18>& chambers() {
  static const std::array<Chamber, 18> table = [] {
    std::array<Chamber, 18> out;
    constexpr Ray cs[3] = {kC1, kC2, kC3};
    constexpr Ray ds[6] = {kD1, kD5, kD3, kD1, kD5, kD3};  // j = 1..6
    int k = 0;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 6; ++j) {
        Chamber ch;
        ch.i = i;
        ch.j = j;
        ch.defining = {cs[i - 1], ds[j - 1], (j % 2 == 1) ? kRT : kLT};
        std::uint16_t def = 0;
        for (Ray r : ch.defining) def |= (1 << r);
        ch.cell.mask = static_cast<std::uint16_t>(((1 << kNumRays) - 1) & ~def);
        out[k++] = ch;
      }
    return out;
  }();
  return table;
}

std::optional<Chamber> chamber_of(const Cell& c) {
  for (const Chamber& ch : chambers())
    if (ch.cell == c) return ch;
  return std::nullopt;
}

bool in_chamber(const TripleLabel& t, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 6)
    throw std::invalid_argument("in_chamber: chamber index out of range");
  Forms fo = eval_forms(t);
  if (!in_cone(fo)) return false;
  const Chamber& ch = chambers()[(i - 1) * 6 + (j - 1)];
  for (Ray r : ch.defining)
    if (!holds(r, fo)) return false;
  return true;
}

const std::vector<Cell>& cells() {
  static const std::vector<Cell> all = [] {
    std::vector<Cell> out;
    for (std::uint16_t m = 0; m < (1 << kNumRays); ++m) {
      Cell c{m};
      if (c.valid()) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.bitmask() < b.bitmask();
    });
    return out;
  }();
  return all;
}

std::array<int, 7> cell_counts() {
  std::array<int, 7> counts{};
  for (const Cell& c : cells()) counts[c.dim()]++;
  return counts;
}

bool face_relation(const Cell& a, const Cell& b) {
  return (a.mask & ~b.mask) == 0;
}

std::string render_diagram(const Cell& c) {
  // 13-column canvas; vertex order around the hexagon matches the item
  // layout: C2 on top, then D1, C1, D5, C3, D3 clockwise. Triangles and the
  // interior ray sit on the middle row.
  auto item = [&](Ray r, const char* glyph, const char* dots) {
    return c.contains_ray(r) ? glyph : dots;
  };
  std::string rows[5];
  rows[0] = std::string("      ") + item(kC2, "C2", "..");
  rows[1] = std::string("  ") + item(kD3, "D3", "..") + "      " +
            item(kD1, "D1", "..");
  rows[2] = std::string("   ") + item(kLT, "<", ".") + "   " +
            item(kStar, "*", ".") + "   " + item(kRT, ">", ".");
  rows[3] = std::string("  ") + item(kC3, "C3", "..") + "      " +
            item(kC1, "C1", "..");
  rows[4] = std::string("      ") + item(kD5, "D5", "..");
  std::string out;
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  out += c.bitmask();
  out += '\n';
  return out;
}

}  // namespace su3
