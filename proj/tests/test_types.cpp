#include <doctest.h>

#include <stdexcept>

#include "core/types.hpp"

using namespace su3;

TEST_CASE("lattice membership") {
  CHECK(in_lattice(TripleLabel{1, 1, 1, 1, 1, 1}));
  CHECK(in_lattice(TripleLabel{1, 0, 0, 1, 0, 0}));  // ray D1
  CHECK_FALSE(in_lattice(TripleLabel{1, 0, 0, 0, 0, 0}));
  CHECK(in_lattice(TripleLabel{0, 0, 0, 0, 0, 0}));
}

TEST_CASE("duality swaps coordinate pairs and is an involution") {
  TripleLabel t{1, 0, 0, 1, 2, 0};
  CHECK(dual(t) == TripleLabel{0, 1, 1, 0, 0, 2});
  TripleLabel star{1, 1, 1, 1, 1, 1};
  CHECK(dual(star) == star);
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b) {
      TripleLabel x{a, b, b, a, a + b, 0};
      CHECK(dual(dual(x)) == x);
      if (in_lattice(x)) CHECK(in_lattice(dual(x)));
    }
}

TEST_CASE("gl_to_su restriction") {
  GLTriple g;
  g.lambda = {2, 1, 0};
  g.mu = {2, 1, 0};
  g.nu = {3, 2, 1};
  CHECK(gl_to_su(g) == TripleLabel{1, 1, 1, 1, 1, 1});

  g.lambda = {1, 0, 0};
  g.mu = {1, 1, 0};
  g.nu = {1, 1, 1};
  CHECK(gl_to_su(g) == TripleLabel{1, 0, 0, 1, 0, 0});

  g.lambda = g.mu = g.nu = {0, 0, 0};
  CHECK(gl_to_su(g) == TripleLabel{0, 0, 0, 0, 0, 0});
}

TEST_CASE("su_to_gl0 section") {
  GLTriple g = su_to_gl0(TripleLabel{1, 1, 1, 1, 1, 1});
  CHECK(g.lambda == std::array<i64, 3>{2, 1, 0});
  CHECK(g.mu == std::array<i64, 3>{2, 1, 0});
  CHECK(g.nu == std::array<i64, 3>{3, 2, 1});

  g = su_to_gl0(TripleLabel{1, 0, 1, 0, 1, 0});
  CHECK(g.lambda == std::array<i64, 3>{1, 0, 0});
  CHECK(g.mu == std::array<i64, 3>{1, 0, 0});
  CHECK(g.nu == std::array<i64, 3>{1, 1, 0});

  CHECK_THROWS_AS(su_to_gl0(TripleLabel{1, 0, 0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("round trips between the SU and GL pictures") {
  // gl_to_su(su_to_gl0(t)) = t on every lattice point with coordinates <= 8.
  Vec6 v{};
  long checked = 0;
  for (v[0] = 0; v[0] <= 8; ++v[0])
    for (v[1] = 0; v[1] <= 8; ++v[1])
      for (v[2] = 0; v[2] <= 8; ++v[2])
        for (v[3] = 0; v[3] <= 8; ++v[3])
          for (v[4] = 0; v[4] <= 8; ++v[4])
            for (v[5] = 0; v[5] <= 8; ++v[5]) {
              TripleLabel t{v};
              if (!in_lattice(t)) continue;
              if (gl_to_su(su_to_gl0(t)) != t)
                FAIL("round trip broke at " << format_triple(t));
              ++checked;
            }
  CHECK(checked == 177147);  // 9^6 / 3

  // su_to_gl0(gl_to_su(g)) = g for balanced g with parts <= 6, lambda3 =
  // mu3 = 0 (nu3 may be any integer of the right size).
  for (i64 a = 0; a <= 6; ++a)
    for (i64 b = 0; b <= a; ++b)
      for (i64 c = 0; c <= 6; ++c)
        for (i64 d = 0; d <= c; ++d) {
          GLTriple g;
          g.lambda = {a, b, 0};
          g.mu = {c, d, 0};
          for (i64 n1 = -6; n1 <= 6; ++n1)
            for (i64 n2 = -6; n2 <= n1; ++n2) {
              i64 n3 = a + b + c + d - n1 - n2;
              if (n3 > n2) continue;
              g.nu = {n1, n2, n3};
              REQUIRE(g.size_balanced());
              TripleLabel t = gl_to_su(g);
              REQUIRE(in_lattice(t));
              CHECK(su_to_gl0(t) == g);
            }
        }
}

TEST_CASE("textual grammars") {
  auto t = parse_triple("1,1;1,1;1,1");
  REQUIRE(t.has_value());
  CHECK(*t == TripleLabel{1, 1, 1, 1, 1, 1});
  CHECK(format_triple(*t) == "1,1;1,1;1,1");

  CHECK_FALSE(parse_triple("1,1;1,1").has_value());
  CHECK_FALSE(parse_triple("1,1;1,1;1,x").has_value());
  CHECK_FALSE(parse_triple("-1,1;1,1;1,1").has_value());  // negative rejected
  CHECK(parse_triple("-1,1;1,1;1,3", false).has_value());
  CHECK_FALSE(parse_triple("").has_value());
  CHECK_FALSE(parse_triple("1,1;1,1;1,1;1,1").has_value());
  CHECK_FALSE(parse_triple("1,1;1,1;1,1 x").has_value());
  // Magnitude guard: int64-overflowing and merely huge literals both fail.
  CHECK_FALSE(parse_triple("99999999999999999999,0;0,0;0,0").has_value());
  CHECK_FALSE(parse_triple("1000000000001,0;0,0;0,2").has_value());
  CHECK(parse_triple("1000000000000,0;0,0;0,2").has_value());

  auto g = parse_gl("2,1,0|2,1,0|3,2,1");
  REQUIRE(g.has_value());
  CHECK(g->lambda == std::array<i64, 3>{2, 1, 0});
  CHECK(format_gl(*g) == "2,1,0|2,1,0|3,2,1");
  CHECK_FALSE(parse_gl("1,2,0|0,0,0|1,2,0").has_value());  // not decreasing
  auto neg = parse_gl("0,-1,-2|2,1,0|0,0,-2");
  REQUIRE(neg.has_value());  // weakly decreasing integers allowed
  CHECK(neg->lambda == std::array<i64, 3>{0, -1, -2});
}
