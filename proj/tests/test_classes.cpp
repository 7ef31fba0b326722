#include <doctest.h>

#include <cstdint>
#include <vector>

#include "chowkit/classes.hpp"

using namespace chowkit;

namespace {

const GradedPoly c1 = GradedPoly::c1();
const GradedPoly c2 = GradedPoly::c2();

// Dense int64 polynomial helpers for the expansion oracle.
using Dense = std::vector<std::int64_t>;

Dense one_plus_x_pow(int e) {
  Dense p{1};
  for (int k = 0; k < e; ++k) {
    Dense q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += p[i];
    }
    p = q;
  }
  return p;
}

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("b and d in low degree") {
    CHECK(b_class(0) == GradedPoly::constant(1));
    CHECK(b_class(1) == -c1);
    CHECK(b_class(2) == c1 * c1 - c2);
    CHECK(b_class(3) == -(c1 * c1 * c1) + c1 * c2 * Rat(2));
    CHECK(d_class(0) == GradedPoly::constant(1));
    CHECK(d_class(1) == -(c1 * c1) + c2 * Rat(2));
    CHECK(d_class(2) == c1 * c1 * c1 * c1 - c1 * c1 * c2 * Rat(4) + c2 * c2 * Rat(3));
    CHECK(b_class(-1).is_zero());
    CHECK(d_class(-2).is_zero());
  }

  TEST_CASE("b_k and d_k dehomogenize to geometric sums") {
    for (int k = 0; k <= 30; ++k) {
      std::vector<Rat> geo_b(k + 1, Rat(sign_pow(k)));
      CHECK(to_inhomogeneous(b_class(k), 2 * k) == UniPoly(geo_b));
      std::vector<Rat> geo_d(2 * k + 1, 0);
      for (int i = 0; i <= k; ++i) geo_d[2 * i] = sign_pow(k);
      CHECK(to_inhomogeneous(d_class(k), 4 * k) == UniPoly(geo_d));
      CHECK(b_bar(k) == b_class(k) * Rat(sign_pow(k)));
    }
  }

  TEST_CASE("closed forms agree with root sums") {
    for (int k = 0; k <= 30; ++k) {
      CHECK(b_class(k) == b_class_from_roots(k));
      CHECK(d_class(k) == d_class_from_roots(k));
    }
  }

  TEST_CASE("expansion coefficients") {
    CHECK(expansion_coefficient(4, 2) == -2);
    CHECK(expansion_coefficient(5, 2) == -5);
    CHECK(expansion_coefficient(7, 0) == -1);
    CHECK(expansion_coefficient(7, -1) == 0);
    CHECK(expansion_coefficient(2, 1) == 2);
    CHECK(expansion_coefficient(5, 1) == 5);
    CHECK_THROWS_AS(expansion_coefficient(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(expansion_coefficient(0, 0), std::invalid_argument);
  }

  TEST_CASE("expansion coefficients rebuild (1+x)^g (int64 oracle)") {
    for (int g = 1; g <= 30; ++g) {
      Dense rhs(g + 1, 0);
      rhs[0] += 1;
      rhs[g] += 1;
      for (int mu = 1; 2 * mu <= g; ++mu) {
        const Dense tail = one_plus_x_pow(g - 2 * mu);
        const std::int64_t a = expansion_coefficient(g, mu).get_si();
        for (std::size_t i = 0; i < tail.size(); ++i) rhs[i + mu] += a * tail[i];
      }
      CHECK(rhs == one_plus_x_pow(g));
      // last coefficient: (-1)^{s+1} 2 for g = 2s, (-1)^{s+1} (2s+1) for g = 2s+1
      const int s = g / 2;
      if (s >= 1) CHECK(expansion_coefficient(g, s) == sign_pow(s + 1) * (g % 2 == 0 ? 2 : g));
    }
  }

  TEST_CASE("binomial defect") {
    CHECK(binomial_defect(1).is_zero());
    CHECK(binomial_defect(2) == UniPoly({0, 2}));
    CHECK(binomial_defect(4) == UniPoly({0, 4, 6, 4}));
  }

  TEST_CASE("library identity checks") {
    for (int h = 0; h <= 20; ++h) CHECK(check_alternating_b_sum(h));
    for (int g = 1; g <= 40; ++g) CHECK(check_binomial_expansion(g));
    // h = 1 by hand: c2 - b_2 = 2 c2 - c1^2 = d_1
    CHECK(c2 - b_class(2) == d_class(1));
  }
}
