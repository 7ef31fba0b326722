#include <doctest.h>

#include <random>

#include "chowkit/arith.hpp"

using namespace chowkit;

TEST_SUITE("arith") {
  TEST_CASE("binomial coefficients, including negative upper index") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    // C(-1, k) = (-1)^k
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-1, 4) == 1);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
  }

  TEST_CASE("frac canonicalizes") {
    CHECK(frac(6, -4) == Rat(-3, 2));
    CHECK(frac(6, -4).get_den() == 2);
    CHECK_THROWS(frac(1, 0));
  }

  TEST_CASE("UniPoly division with remainder reconstructs") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Rat> a(6), b(3);
      for (auto& x : a) x = coeff(rng);
      for (auto& x : b) x = coeff(rng);
      b.back() = 1 + (trial % 5);
      const UniPoly p(a), q(b);
      const auto [quot, rem] = p.divmod(q);
      CHECK(quot * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
    CHECK_THROWS_AS(UniPoly::x_pow_minus_one(3).exact_div(UniPoly::x_pow_minus_one(2)), std::domain_error);
    CHECK(UniPoly::x_pow_minus_one(6).exact_div(UniPoly::x_pow_minus_one(2)) ==
          UniPoly({1, 0, 1, 0, 1}));
  }

  TEST_CASE("GradedPoly products and degrees") {
    const GradedPoly c1 = GradedPoly::c1();
    const GradedPoly c2 = GradedPoly::c2();
    const GradedPoly s = (c1 + c2) * (c1 - c2);
    CHECK(s == c1 * c1 - c2 * c2);
    CHECK_FALSE(s.is_homogeneous());
    CHECK((c1 * c2).degree() == 6);
    CHECK(GradedPoly::constant(0).is_zero());
    CHECK((c1 * Rat(1, 3)).is_two_local());
    CHECK_FALSE((c1 * Rat(1, 2)).is_two_local());
    CHECK_FALSE((c1 * Rat(1, 3)).has_integer_coefficients());
  }

  TEST_CASE("chi squares to the supplied class") {
    const int m = 5;
    const GradedPoly chi = GradedPoly::chi(m);
    CHECK(chi.degree() == 2 * m - 4);
    const GradedPoly sq = GradedPoly::c1c2(2, 1);
    CHECK(multiply(chi, chi, sq) == sq);
    CHECK(multiply(chi, GradedPoly::c1(), sq) == GradedPoly::c1() * chi);
  }

  TEST_CASE("sym_to_c rewrites power sums") {
    // alpha^2 + beta^2 = c1^2 - 2 c2
    CHECK(sym_to_c(SymPoly({{{2, 0}, 1}, {{0, 2}, 1}})) == GradedPoly::c1c2(2, 0) - GradedPoly::c1c2(0, 1) * Rat(2));
    // alpha^3 + beta^3 = c1^3 - 3 c1 c2
    CHECK(sym_to_c(SymPoly({{{3, 0}, 1}, {{0, 3}, 1}})) == GradedPoly::c1c2(3, 0) - GradedPoly::c1c2(1, 1) * Rat(3));
    CHECK_THROWS_AS(SymPoly({{{2, 0}, 1}}), std::invalid_argument);
  }

  TEST_CASE("dehomogenization round-trips on random homogeneous polynomials") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
      const int deg = 2 * (1 + trial % 12);
      GradedPoly p;
      for (int b = 0; 4 * b <= deg; ++b) p += GradedPoly::c1c2((deg - 4 * b) / 2, b) * Rat(coeff(rng));
      if (p.is_zero()) continue;
      const UniPoly u = to_inhomogeneous(p, deg);
      CHECK(u.degree() <= deg / 2);
      CHECK(from_inhomogeneous(u, deg) == p);
    }
    // c1 = 1 + x, c2 = x
    CHECK(to_inhomogeneous(GradedPoly::c1(), 2) == UniPoly({1, 1}));
    CHECK(to_inhomogeneous(GradedPoly::c2(), 4) == UniPoly({0, 1}));
    CHECK_THROWS(from_inhomogeneous(UniPoly({1, 2}), 2));
  }
}
