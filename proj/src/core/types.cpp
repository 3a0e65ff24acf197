#include "core/types.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace su3 {

i64 TripleLabel::max_coord() const {
  return *std::max_element(v.begin(), v.end());
}

bool in_lattice(const TripleLabel& t) {
  i64 d = t.l1() + t.m1() + t.n1() - t.l2() - t.m2() - t.n2();
  return d % 3 == 0;
}

TripleLabel dual(const TripleLabel& t) {
  return {t.l2(), t.l1(), t.m2(), t.m1(), t.n2(), t.n1()};
}

bool GLTriple::weakly_decreasing() const {
  auto wd = [](const std::array<i64, 3>& a) {
    return a[0] >= a[1] && a[1] >= a[2];
  };
  return wd(lambda) && wd(mu) && wd(nu);
}

bool GLTriple::size_balanced() const {
  auto sz = [](const std::array<i64, 3>& a) { return a[0] + a[1] + a[2]; };
  return sz(lambda) + sz(mu) == sz(nu);
}

TripleLabel gl_to_su(const GLTriple& g) {
  return {g.lambda[0] - g.lambda[1], g.lambda[1] - g.lambda[2],
          g.mu[0] - g.mu[1],         g.mu[1] - g.mu[2],
          g.nu[1] - g.nu[2],         g.nu[0] - g.nu[1]};
}

GLTriple su_to_gl0(const TripleLabel& t) {
  if (!in_lattice(t))
    throw std::domain_error("su_to_gl0: label violates the mod-3 lattice condition");
  i64 num = t.l1() + 2 * t.l2() + t.m1() + 2 * t.m2() - 2 * t.n1() - t.n2();
  // num = |lambda|+|mu|-2 n1-n2 is divisible by 3 exactly on the lattice.
  i64 nu3 = num / 3;
  if (nu3 * 3 != num)
    throw std::domain_error("su_to_gl0: nu3 not integral");
  GLTriple g;
  g.lambda = {t.l1() + t.l2(), t.l2(), 0};
  g.mu = {t.m1() + t.m2(), t.m2(), 0};
  g.nu = {nu3 + t.n1() + t.n2(), nu3 + t.n1(), nu3};
  return g;
}

namespace {

bool parse_int_list(std::string_view s, char sep, i64* out, int n) {
  size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    size_t end = pos;
    if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
    while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
    i64 val = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + end, val);
    if (ec != std::errc() || p != s.data() + end) return false;
    if (val > kMaxCoord || val < -kMaxCoord) return false;
    out[i] = val;
    pos = end;
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (i + 1 < n) {
      if (pos >= s.size() || s[pos] != sep) return false;
      ++pos;
    }
  }
  return pos == s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::optional<TripleLabel> parse_triple(std::string_view s,
                                        bool require_nonnegative) {
  auto groups = split(s, ';');
  if (groups.size() != 3) return std::nullopt;
  Vec6 v;
  for (int g = 0; g < 3; ++g)
    if (!parse_int_list(groups[g], ',', v.data() + 2 * g, 2)) return std::nullopt;
  TripleLabel t{v};
  if (require_nonnegative && !t.nonnegative()) return std::nullopt;
  return t;
}

std::optional<GLTriple> parse_gl(std::string_view s) {
  auto groups = split(s, '|');
  if (groups.size() != 3) return std::nullopt;
  GLTriple g;
  std::array<i64, 3>* vecs[3] = {&g.lambda, &g.mu, &g.nu};
  for (int i = 0; i < 3; ++i)
    if (!parse_int_list(groups[i], ',', vecs[i]->data(), 3)) return std::nullopt;
  if (!g.weakly_decreasing()) return std::nullopt;
  return g;
}

std::string format_triple(const TripleLabel& t) {
  std::string s;
  for (int g = 0; g < 3; ++g) {
    if (g) s += ';';
    s += std::to_string(t.v[2 * g]);
    s += ',';
    s += std::to_string(t.v[2 * g + 1]);
  }
  return s;
}

std::string format_gl(const GLTriple& g) {
  const std::array<i64, 3>* vecs[3] = {&g.lambda, &g.mu, &g.nu};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += '|';
    for (int j = 0; j < 3; ++j) {
      if (j) s += ',';
      s += std::to_string((*vecs[i])[j]);
    }
  }
  return s;
}

}  // namespace su3
