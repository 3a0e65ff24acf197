#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "core/lr.hpp"
#include "core/multiplicity.hpp"

using namespace su3;

namespace {

GLTriple make(std::array<i64, 3> l, std::array<i64, 3> m, std::array<i64, 3> n) {
  GLTriple g;
  g.lambda = l;
  g.mu = m;
  g.nu = n;
  return g;
}

// Partitions with at most three parts, each part <= max_part.
std::vector<std::array<i64, 3>> partitions_up_to(i64 max_part) {
  std::vector<std::array<i64, 3>> out;
  for (i64 a = 0; a <= max_part; ++a)
    for (i64 b = 0; b <= a; ++b)
      for (i64 c = 0; c <= b; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST_CASE("known LR coefficients") {
  CHECK(lr_coefficient(make({1, 0, 0}, {1, 0, 0}, {2, 0, 0})) == 1);
  CHECK(lr_coefficient(make({2, 1, 0}, {2, 1, 0}, {3, 2, 1})) == 2);
  CHECK(lr_coefficient(make({1, 1, 1}, {0, 0, 0}, {1, 1, 1})) == 1);
  CHECK(lr_coefficient(make({1, 0, 0}, {1, 0, 0}, {1, 1, 1})) == 0);
  CHECK_THROWS_AS(lr_coefficient(make({0, 1, 0}, {0, 0, 0}, {0, 1, 0})),
                  std::domain_error);
}

TEST_CASE("tableau oracle basics") {
  CHECK(lr_tableau_oracle(make({1, 0, 0}, {1, 0, 0}, {2, 0, 0})) == 1);
  CHECK(lr_tableau_oracle(make({2, 1, 0}, {2, 1, 0}, {3, 2, 1})) == 2);
  CHECK(lr_tableau_oracle(make({1, 1, 1}, {0, 0, 0}, {1, 1, 1})) == 1);
  // Empty skew shape.
  CHECK(lr_tableau_oracle(make({2, 1, 0}, {0, 0, 0}, {2, 1, 0})) == 1);
  // lambda not contained in nu.
  CHECK(lr_tableau_oracle(make({3, 0, 0}, {1, 0, 0}, {2, 2, 0})) == 0);
  CHECK_THROWS_AS(lr_tableau_oracle(make({1, 0, -1}, {1, 0, 0}, {1, 1, -1})),
                  std::domain_error);
  CHECK(lr_tableau_oracle(make({3, 2, 1}, {3, 2, 1}, {4, 4, 4})) ==
        lr_coefficient(make({3, 2, 1}, {3, 2, 1}, {4, 4, 4})));
}

TEST_CASE("closed form equals the tableau oracle on a partition sweep") {
  auto parts = partitions_up_to(5);
  for (const auto& nu : parts) {
    i64 size_nu = nu[0] + nu[1] + nu[2];
    for (const auto& lambda : parts) {
      i64 size_lambda = lambda[0] + lambda[1] + lambda[2];
      if (size_lambda > size_nu) continue;
      for (const auto& mu : parts) {
        if (size_lambda + mu[0] + mu[1] + mu[2] != size_nu) continue;
        GLTriple g = make(lambda, mu, nu);
        CHECK(lr_coefficient(g) == lr_tableau_oracle(g));
      }
    }
  }
}

TEST_CASE("oracle on weakly decreasing labels via determinant twists") {
  GLTriple g = make({1, 0, -1}, {2, 1, 1}, {2, 1, 1});
  CHECK(lr_coefficient(g) == lr_oracle_normalized(g));
  g = make({0, -1, -1}, {0, 0, -1}, {0, -1, -2});
  CHECK(lr_coefficient(g) == lr_oracle_normalized(g));
}

TEST_CASE("delta involution") {
  GLTriple g = make({2, 1, 0}, {2, 1, 1}, {4, 2, 1});
  GLTriple h = delta_involution(g);
  CHECK(h.lambda == std::array<i64, 3>{3, 2, 1});
  CHECK(h.mu == std::array<i64, 3>{1, 0, 0});
  CHECK(h.nu == g.nu);
  CHECK(delta_involution(h) == g);

  // Fixed when lambda3 = mu3.
  GLTriple fixed = make({2, 1, 1}, {3, 1, 1}, {4, 3, 2});
  CHECK(delta_involution(fixed) == fixed);

  // Preserves the coefficient on a sweep.
  auto parts = partitions_up_to(4);
  for (const auto& lambda : parts)
    for (const auto& mu : parts) {
      i64 size = lambda[0] + lambda[1] + lambda[2] + mu[0] + mu[1] + mu[2];
      for (const auto& nu : parts) {
        if (nu[0] + nu[1] + nu[2] != size) continue;
        GLTriple a = make(lambda, mu, nu);
        CHECK(lr_coefficient(a) == lr_coefficient(delta_involution(a)));
      }
    }
}

TEST_CASE("LR symmetry group order") {
  CHECK(kLRSymmetryOrder == 288);
}
