#include <doctest.h>

#include <random>

#include "chowkit/lattice.hpp"
#include "support.hpp"

using namespace chowkit;
using namespace testsupport;

TEST_SUITE("lattice") {
  TEST_CASE("Smith form on 1000 random matrices") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
      const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 2 : 12);
      const std::string why = check_snf(a);
      INFO(a.to_string());
      CHECK_MESSAGE(why.empty(), why);
    }
  }

  TEST_CASE("Smith form of a rank-deficient matrix") {
    const IntMatrix a = IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 4, 6}, {1, 2, 3}, {0, 0, 0}});
    const auto s = snf(a);
    CHECK(s.rank == 1);
    CHECK(s.factors == std::vector<Int>{1});
    CHECK(check_snf(IntMatrix(3, 2)).empty());
  }

  TEST_CASE("Hermite form shape and invariance") {
    std::mt19937_64 rng(0xBEEF);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
      const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
      const std::string why = check_hnf(rng, a);
      CHECK_MESSAGE(why.empty(), why);
    }
    const IntMatrix h = hnf(IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 0}, {3, 5}}));
    CHECK(h == IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 0}, {3, 5}}));
  }

  TEST_CASE("determinant matches the Leibniz expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const IntMatrix a = random_matrix(rng, n, n, 20);
      CHECK(determinant(a) == leibniz_det(a));
    }
  }

  TEST_CASE("unimodular inverse") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const IntMatrix u = random_unimodular(rng, 5);
      CHECK(u * unimodular_inverse(u) == IntMatrix::identity(5));
    }
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows(std::vector<std::vector<long>>{{2}})), std::domain_error);
  }

  TEST_CASE("lattice index is multiplicative") {
    std::mt19937_64 rng(0x1D);
    for (int trial = 0; trial < 200; ++trial) {
      const std::string why = check_index_multiplicativity(rng, 1 + trial % 5);
      CHECK_MESSAGE(why.empty(), why);
    }
  }

  TEST_CASE("lattice membership and half-integral vectors") {
    const GradedLattice l({{2, 2}}, {{2, {RatVector{1, 0}, RatVector{Rat(1, 2), Rat(1, 2)}}}});
    CHECK(l.contains(RatVector{0, 1}, 2));
    CHECK(l.contains(RatVector{Rat(3, 2), Rat(1, 2)}, 2));
    CHECK_FALSE(l.contains(RatVector{Rat(1, 4), 0}, 2));
    const GradedLattice z({{2, 2}}, {{2, {RatVector{1, 0}, RatVector{0, 1}}}});
    CHECK(l.contains(z));
    CHECK(index_of(z, l) == 2);
    CHECK_THROWS_AS(index_of(l, z), std::invalid_argument);
    CHECK_THROWS_AS(GradedLattice({{2, 2}}, {{2, {RatVector{1, 1}, RatVector{2, 2}}}}), std::invalid_argument);
  }

  TEST_CASE("invariant factors of direct sums") {
    CHECK(invariant_factors({2, 4, 3}) == std::vector<Int>{2, 12});
    CHECK(invariant_factors({1, 1}).empty());
    CHECK(invariant_factors({6, 10}) == std::vector<Int>{2, 30});
  }

  TEST_CASE("graded cokernel") {
    // Z --2--> Z^2 via (2, 3)^T: cokernel Z, degree 0 free of rank 1 stays.
    GradedMapFamily f;
    f.dims = {{0, 1}, {2, 2}};
    f.maps[0] = IntMatrix::from_rows(std::vector<std::vector<long>>{{2}, {3}});
    auto rep = cokernel(f);
    REQUIRE(rep.find(2) != nullptr);
    CHECK(rep.find(2)->free_rank == 1);
    CHECK(rep.find(2)->torsion.empty());
    CHECK(rep.find(0)->free_rank == 1);

    f.dims = {{0, 2}, {2, 2}};
    f.maps[0] = IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 0}, {0, 3}});
    rep = cokernel(f);
    CHECK(rep.find(2)->free_rank == 0);
    CHECK(rep.find(2)->torsion == std::vector<Int>{6});
    CHECK(rep.torsion_order() == 6);

    f.maps[0] = IntMatrix(3, 3);
    CHECK_THROWS_AS(cokernel(f), std::invalid_argument);
  }
}
