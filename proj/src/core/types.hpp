#pragma once

// Label types for the SU(3) triple-multiplicity lattice and the GL(3) bridge.
//
// A triple label t = (l1,l2; m1,m2; n1,n2) names a triple of SU(3) irreps by
// Dynkin labels. Labels of actual representations are nonnegative; the struct
// itself admits any 64-bit integers so that lattice automorphisms can be
// applied to arbitrary lattice points (the multiplicity vanishes off the
// nonnegative orthant). Parsers and the public API enforce nonnegativity.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace su3 {

using i64 = std::int64_t;
using Vec6 = std::array<i64, 6>;  // (l1, l2, m1, m2, n1, n2)
using Vec9 = std::array<i64, 9>;  // (lambda | mu | nu), three parts each

// Largest coordinate magnitude accepted by the parsers. Keeps every
// downstream int64 computation (forms, fiber scan, 6x6 determinants with a
// single non-unit column) overflow-free.
inline constexpr i64 kMaxCoord = 1'000'000'000'000LL;

struct DynkinLabel {
  i64 a1 = 0;
  i64 a2 = 0;

  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;
};

// Dual representation: the label read backwards.
inline DynkinLabel dual(DynkinLabel a) { return {a.a2, a.a1}; }

struct TripleLabel {
  Vec6 v{};

  constexpr TripleLabel() = default;
  constexpr explicit TripleLabel(Vec6 w) : v(w) {}
  constexpr TripleLabel(i64 l1, i64 l2, i64 m1, i64 m2, i64 n1, i64 n2)
      : v{l1, l2, m1, m2, n1, n2} {}
  TripleLabel(DynkinLabel l, DynkinLabel m, DynkinLabel n)
      : v{l.a1, l.a2, m.a1, m.a2, n.a1, n.a2} {}

  i64 l1() const { return v[0]; }
  i64 l2() const { return v[1]; }
  i64 m1() const { return v[2]; }
  i64 m2() const { return v[3]; }
  i64 n1() const { return v[4]; }
  i64 n2() const { return v[5]; }

  DynkinLabel l() const { return {v[0], v[1]}; }
  DynkinLabel m() const { return {v[2], v[3]}; }
  DynkinLabel n() const { return {v[4], v[5]}; }

  bool nonnegative() const {
    for (i64 c : v)
      if (c < 0) return false;
    return true;
  }

  i64 max_coord() const;

  friend bool operator==(const TripleLabel&, const TripleLabel&) = default;
  friend auto operator<=>(const TripleLabel& a, const TripleLabel& b) {
    return a.v <=> b.v;
  }
};

inline TripleLabel operator+(TripleLabel a, TripleLabel b) {
  Vec6 r;
  for (int i = 0; i < 6; ++i) r[i] = a.v[i] + b.v[i];
  return TripleLabel{r};
}

inline TripleLabel operator*(i64 k, TripleLabel t) {
  Vec6 r;
  for (int i = 0; i < 6; ++i) r[i] = k * t.v[i];
  return TripleLabel{r};
}

// Membership in the support lattice: l1+m1+n1 == l2+m2+n2 (mod 3).
bool in_lattice(const TripleLabel& t);

// (l;m;n) -> (l*;m*;n*); an involution and a lattice automorphism.
TripleLabel dual(const TripleLabel& t);

// A triple of weakly decreasing integer 3-vectors (GL(3) highest weights).
// Partition-only restrictions are enforced where an operation needs them.
struct GLTriple {
  std::array<i64, 3> lambda{};
  std::array<i64, 3> mu{};
  std::array<i64, 3> nu{};

  bool weakly_decreasing() const;
  bool size_balanced() const;  // |lambda| + |mu| == |nu|
  i64 delta() const { return lambda[2] - mu[2]; }

  friend bool operator==(const GLTriple&, const GLTriple&) = default;
};

// Row-difference restriction GL(3) -> SU(3). Note the crossing on nu:
// n1 = nu2-nu3, n2 = nu1-nu2 (the restriction of W_nu is V_{n*}).
TripleLabel gl_to_su(const GLTriple& g);

// Section of gl_to_su with lambda3 = mu3 = 0; nu3 is pinned by the size
// balance and is an integer exactly when t is in the lattice.
// Throws std::domain_error on non-lattice input.
GLTriple su_to_gl0(const TripleLabel& t);

// --- textual forms (the CLI's parse targets) ---------------------------------
// TripleLabel:  l1,l2;m1,m2;n1,n2        e.g. 1,1;1,1;1,1
// GLTriple:     l1,l2,l3|m1,m2,m3|n1,n2,n3

// Parse errors are reported via std::nullopt; `require_nonnegative` rejects
// negative coordinates (the labels of actual representations).
std::optional<TripleLabel> parse_triple(std::string_view s,
                                        bool require_nonnegative = true);
std::optional<GLTriple> parse_gl(std::string_view s);

std::string format_triple(const TripleLabel& t);
std::string format_gl(const GLTriple& g);

}  // namespace su3
