#include <doctest.h>

#include <random>

#include "chowkit/classes.hpp"
#include "chowkit/quotient.hpp"

using namespace chowkit;

TEST_SUITE("quotient") {
  TEST_CASE("rejects n < 6") { CHECK_THROWS_AS(QuotientRing(5), std::invalid_argument); }

  TEST_CASE("n = 9 shape") {
    const QuotientRing r(9);
    CHECK(r.m() == 4);
    CHECK(r.total_rank() == 24);
    CHECK(r.top_degree() == 22);
    CHECK(r.dim(0) == 1);
    CHECK(r.dim(r.top_degree()) == 1);
    CHECK(r.dim(r.top_degree() + 2) == 0);
  }

  TEST_CASE("total rank is 2m(m-1) and the Hilbert function is symmetric") {
    for (int n = 6; n <= 17; ++n) {
      const QuotientRing r(n);
      const std::size_t m = r.m();
      CHECK(r.total_rank() == 2 * m * (m - 1));
      for (int d = 0; d <= r.top_degree(); d += 2) CHECK(r.dim(d) == r.dim(r.top_degree() - d));
    }
  }

  TEST_CASE("relations reduce to zero") {
    for (int n = 6; n <= 15; ++n) {
      const QuotientRing r(n);
      for (const auto& rel : r.relations()) CHECK(r.normal_form(rel).is_zero());
      CHECK(r.normal_form(d_class(r.m() - 1)).is_zero());
      if (r.even()) {
        const GradedPoly chi = GradedPoly::chi(r.m());
        CHECK(r.normal_form(chi * GradedPoly::c2()).is_zero());
        CHECK(r.mul(r.normal_form(chi), r.normal_form(chi)) == r.normal_form(d_class(r.m() - 2)));
        CHECK(r.chi_square() == d_class(r.m() - 2));
      } else {
        CHECK(r.normal_form(GradedPoly::c2().pow(2) * d_class(r.m() - 2)).is_zero());
        CHECK_THROWS(r.chi_square());
      }
    }
  }

  TEST_CASE("normal form is a ring map") {
    std::mt19937_64 rng(3);
    for (int n : {8, 9, 12, 13}) {
      const QuotientRing r(n);
      const int cd = r.chi_degree();
      std::uniform_int_distribution<int> exp(0, r.m());
      std::uniform_int_distribution<long> coeff(-5, 5);
      auto random_poly = [&] {
        GradedPoly p;
        for (int k = 0; k < 4; ++k) {
          const Monomial mono{exp(rng), exp(rng) / 2, r.even() ? exp(rng) % 2 : 0};
          p += GradedPoly::monomial(coeff(rng), mono, cd);
        }
        return p;
      };
      for (int trial = 0; trial < 40; ++trial) {
        const GradedPoly p = random_poly(), q = random_poly();
        const GradedPoly pq = multiply(p, q, r.even() ? r.chi_square() : GradedPoly());
        CHECK(r.normal_form(pq) == r.mul(r.normal_form(p), r.normal_form(q)));
        CHECK(r.normal_form(p + q) == r.normal_form(p) + r.normal_form(q));
        CHECK(r.normal_form(r.lift(r.normal_form(p))) == r.normal_form(p));
      }
    }
  }

  TEST_CASE("v-classes") {
    for (int n = 6; n <= 15; ++n) {
      const QuotientRing r(n);
      const int m = r.m();
      const auto [v, w] = r.v_classes();
      CHECK(v.degree < w.degree);
      CHECK(v.elem == r.normal_form(v.poly));
      CHECK(w.elem == r.normal_form(w.poly));
      if (r.even()) {
        CHECK(v.degree == 2 * m - 4);
        CHECK(w.degree == 2 * m - 2);
        CHECK(v.poly == (GradedPoly::chi(m) - b_class(m - 2)) * Rat(1, 2));
        CHECK(w.poly == b_class(m - 1) * Rat(1, 2));
      } else {
        CHECK(v.degree == 2 * m - 2);
        CHECK(w.degree == 2 * m);
        CHECK(v.poly == b_class(m - 1) * Rat(1, 2));
        CHECK(w.poly == GradedPoly::c2() * b_class(m - 2) * Rat(1, 2));
      }
      // 2v and 2w are integral polynomial classes; v itself is not.
      CHECK((v.elem * Rat(2)).has_integer_coords());
      CHECK_FALSE(v.elem.has_integer_coords());
    }
  }

  TEST_CASE("mod-p dimensions agree with Q for large p") {
    const QuotientRing r(11);
    for (int d = 0; d <= r.top_degree(); d += 2) CHECK(r.dim_mod_p(d, 101) == r.dim(d));
  }

  TEST_CASE("RingElem arithmetic") {
    const QuotientRing r(10);
    const RingElem x = r.c1() + r.c2();
    CHECK_FALSE(x.is_homogeneous());
    CHECK_THROWS(x.degree());
    CHECK((x - x).is_zero());
    CHECK(r.pow(r.c1(), 3) == r.mul(r.c1(), r.mul(r.c1(), r.c1())));
    CHECK(r.c1().degree() == 2);
  }
}
