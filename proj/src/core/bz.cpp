#include "core/bz.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace su3 {

bool BZLabelling::nonnegative() const {
  for (i64 a : y)
    if (a < 0) return false;
  for (i64 a : z)
    if (a < 0) return false;
  return true;
}

std::string format_bz(const BZLabelling& b) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ',';
    s += std::to_string(b.y[i]);
  }
  s += '/';
  for (int j = 0; j < 6; ++j) {
    if (j) s += ',';
    s += std::to_string(b.z[j]);
  }
  return s;
}

std::optional<BZLabelling> parse_bz(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  BZLabelling b;
  auto parse_list = [](std::string_view part, i64* out, int n) {
    size_t pos = 0;
    for (int i = 0; i < n; ++i) {
      size_t end = pos;
      if (end < part.size() && (part[end] == '-' || part[end] == '+')) ++end;
      while (end < part.size() && part[end] >= '0' && part[end] <= '9') ++end;
      i64 val = 0;
      auto [p, ec] = std::from_chars(part.data() + pos, part.data() + end, val);
      if (ec != std::errc() || p != part.data() + end) return false;
      if (val > kMaxCoord || val < -kMaxCoord) return false;
      out[i] = val;
      pos = end;
      if (i + 1 < n) {
        if (pos >= part.size() || part[pos] != ',') return false;
        ++pos;
      }
    }
    return pos == part.size();
  };
  if (!parse_list(s.substr(0, slash), b.y.data(), 3)) return std::nullopt;
  if (!parse_list(s.substr(slash + 1), b.z.data(), 6)) return std::nullopt;
  return b;
}

BZLabelling bz_of(const TripleLabel& t, i64 x) {
  if (!in_lattice(t))
    throw std::domain_error("bz_of: label violates the mod-3 lattice condition");
  Forms fo = eval_forms(t);
  BZLabelling b;
  for (int i = 0; i < 3; ++i) b.y[i] = fo.f3[i] / 3 - x;
  for (int j = 0; j < 6; ++j) b.z[j] = x - fo.g3[j] / 3;
  return b;
}

TripleLabel project(const BZLabelling& b) {
  return {b.y[1] + b.z[3], b.y[2] + b.z[4], b.y[2] + b.z[5],
          b.y[0] + b.z[0], b.y[0] + b.z[1], b.y[1] + b.z[2]};
}

std::vector<BZLabelling> enumerate_fiber(const TripleLabel& t, FiberMode mode,
                                         std::size_t cap) {
  std::vector<BZLabelling> out;
  if (!in_lattice(t)) return out;
  if (mode == FiberMode::kScan) {
    Forms fo = eval_forms(t);
    i64 lo = fo.max_g3() / 3, hi = fo.min_f3() / 3;
    if (lo > hi) return out;
    if (static_cast<std::size_t>(hi - lo + 1) > cap)
      throw std::length_error("enumerate_fiber: fiber larger than cap");
    // Emit in increasing y1 = -x order.
    for (i64 x = hi; x >= lo; --x) out.push_back(bz_of(t, x));
    return out;
  }
  // Exhaustive mode: try every corner labelling in the bounding box; the six
  // hexagon labels are then pinned by the projection equations. Uses only
  // the projection definition plus the hexagon check, independent of the
  // x-scan parameterization.
  const i64 bound = std::max<i64>(t.max_coord(), 0);
  for (i64 y1 = 0; y1 <= bound; ++y1)
    for (i64 y2 = 0; y2 <= bound; ++y2)
      for (i64 y3 = 0; y3 <= bound; ++y3) {
        BZLabelling b;
        b.y = {y1, y2, y3};
        b.z = {t.m2() - y1, t.n1() - y1, t.n2() - y2,
               t.l1() - y2, t.l2() - y3, t.m1() - y3};
        if (!b.nonnegative() || !b.hexagon_ok()) continue;
        if (project(b) != t) continue;
        if (out.size() >= cap)
          throw std::length_error("enumerate_fiber: fiber larger than cap");
        out.push_back(b);
      }
  std::sort(out.begin(), out.end());
  return out;
}

i64 fiber_count_exhaustive(const TripleLabel& t) {
  if (!in_lattice(t)) return 0;
  i64 count = 0;
  const i64 bound = std::max<i64>(t.max_coord(), 0);
  for (i64 y1 = 0; y1 <= bound; ++y1)
    for (i64 y2 = 0; y2 <= bound; ++y2)
      for (i64 y3 = 0; y3 <= bound; ++y3) {
        BZLabelling b;
        b.y = {y1, y2, y3};
        b.z = {t.m2() - y1, t.n1() - y1, t.n2() - y2,
               t.l1() - y2, t.l2() - y3, t.m1() - y3};
        if (b.nonnegative() && b.hexagon_ok() && project(b) == t) ++count;
      }
  return count;
}

BZLabelling fundamental_triangle(Ray r) {
  BZLabelling b;
  switch (r) {
    case kC1: b.y = {1, 0, 0}; break;
    case kC2: b.y = {0, 1, 0}; break;
    case kC3: b.y = {0, 0, 1}; break;
    case kD1: b.z = {1, 0, 0, 1, 0, 0}; break;
    case kD3: b.z = {0, 0, 1, 0, 0, 1}; break;
    case kD5: b.z = {0, 1, 0, 0, 1, 0}; break;
    case kLT: b.z = {0, 1, 0, 1, 0, 1}; break;
    case kRT: b.z = {1, 0, 1, 0, 1, 0}; break;
    case kStar:
      throw std::domain_error("fundamental_triangle: STAR is interior");
  }
  return b;
}

std::array<i64, kNumRays> decompose(const BZLabelling& b) {
  if (!b.hexagon_ok())
    throw std::domain_error("decompose: hexagon relation violated");
  if (!b.nonnegative())
    throw std::domain_error("decompose: negative label");
  std::array<i64, kNumRays> c{};
  c[kC1] = b.y[0];
  c[kC2] = b.y[1];
  c[kC3] = b.y[2];
  const i64 w = b.omega();
  if (w >= 0) {
    c[kD1] = b.z[0];
    c[kD3] = b.z[2];
    c[kD5] = b.z[4];
    c[kLT] = w;
  } else {
    c[kD1] = b.z[3];
    c[kD3] = b.z[5];
    c[kD5] = b.z[1];
    c[kRT] = -w;
  }
  return c;
}

BZLabelling recompose(const std::array<i64, kNumRays>& coeff) {
  BZLabelling acc;
  for (int r = 0; r < kNumRays; ++r) {
    if (r == kStar || coeff[r] == 0) continue;
    BZLabelling f = fundamental_triangle(static_cast<Ray>(r));
    for (int i = 0; i < 3; ++i) acc.y[i] += coeff[r] * f.y[i];
    for (int j = 0; j < 6; ++j) acc.z[j] += coeff[r] * f.z[j];
  }
  return acc;
}

}  // namespace su3
