#include <doctest.h>

#include <set>

#include "chowkit/chow_y.hpp"

using namespace chowkit;

namespace {

// Independent closed form of [CH(Y_n) : A_n]: squares of the odd numbers
// below m - 1 (m even) or up to m - 2 (m odd), times m - 1 for m even and
// times m for m odd, n odd.
Int index_oracle(int n) {
  const int m = n / 2;
  Int r = 1;
  const int top = (m % 2 == 0) ? m - 3 : m - 2;
  for (int k = 1; k <= top; k += 2) r *= k * k;
  if (m % 2 == 0) r *= m - 1;
  else if (n % 2 == 1) r *= m;
  return r;
}

}  // namespace

TEST_SUITE("chow_y") {
  TEST_CASE("case classification") {
    CHECK(chow_case(8) == ChowCase::even_n_even_m);
    CHECK(chow_case(10) == ChowCase::even_n_odd_m);
    CHECK(chow_case(9) == ChowCase::odd_n_even_m);
    CHECK(chow_case(11) == ChowCase::odd_n_odd_m);
    CHECK(case_name(ChowCase::odd_n_odd_m) == "n=2m+1, m odd");
    CHECK_THROWS_AS(ChowY(5), std::invalid_argument);
  }

  TEST_CASE("index against known values") {
    CHECK(expected_index(8) == 3);
    CHECK(expected_index(11) == 45);
    CHECK(expected_index(13) == 45);
    CHECK(expected_index(6) == 1);
    for (int n = 6; n <= 40; ++n) CHECK(expected_index(n) == index_oracle(n));
  }

  TEST_CASE("basis lattice: index, reference lattice, divisors") {
    for (int n = 6; n <= 16; ++n) {
      CAPTURE(n);
      const ChowY c(n);
      const IndexReport r = index_vs_An(c);
      CHECK(r.ok());
      CHECK(r.lattice_index == index_oracle(n));
      CHECK(c.rank() == c.ring().total_rank());
      CHECK(c.lattice().contains(c.an_lattice()));
      Int prod = 1;
      for (const auto& e : c.basis()) {
        if (e.divided()) prod *= e.l;
        CHECK(e.l % 2 == 1);
        CHECK(e.elem.degree() == e.degree);
      }
      CHECK(prod == index_oracle(n));
    }
  }

  TEST_CASE("labels are unique and every basis element has its own coordinates") {
    const ChowY c(12);
    std::set<std::string> labels;
    for (std::size_t i = 0; i < c.rank(); ++i) {
      labels.insert(c.basis()[i].label);
      const auto co = c.coords(c.basis()[i].elem);
      REQUIRE(co.has_value());
      REQUIRE(co->size() == 1);
      CHECK(co->front().first == i);
      CHECK(co->front().second == 1);
    }
    CHECK(labels.size() == c.rank());
  }

  TEST_CASE("v-classes lie in the lattice but halves of them do not") {
    for (int n : {8, 9, 10, 11}) {
      const ChowY c(n);
      CHECK(c.coords(c.v().elem).has_value());
      CHECK(c.coords(c.w().elem).has_value());
      CHECK_FALSE(c.coords(c.v().elem * Rat(1, 2)).has_value());
      CHECK_FALSE(c.coords(c.monomial(0, 0, true, false) * Rat(1, 3)).has_value());
    }
  }

  TEST_CASE("closure under multiplication") {
    for (int n = 6; n <= 14; ++n) {
      CAPTURE(n);
      const ChowY c(n);
      const ClosureReport r = verify_closure(c);
      CHECK_MESSAGE(r.closed, r.failure);
      CHECK(r.commutative);
      CHECK(r.associative);
      CHECK(r.pairs > 0);
      CHECK(r.triples_checked > 0);
    }
  }

  TEST_CASE("mod-p dimensions") {
    for (int n = 6; n <= 14; ++n)
      for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        CAPTURE(n);
        CAPTURE(p);
        const ChowY c(n);
        const ModPReport r = mod_p_structure(c, p);
        CHECK(r.matches);
        std::size_t total = 0;
        for (const auto& [d, k] : r.basis_dims) total += k;
        CHECK(total == c.rank());
      }
  }
}
