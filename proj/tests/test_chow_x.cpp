#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "chowkit/chow_x.hpp"
#include "chowkit/quotient.hpp"

using namespace chowkit;

namespace {

bool has_torsion(const AbelianGroupReport& r, int degree, const Int& order) {
  const DegreeGroup* g = r.find(degree);
  if (g == nullptr) return false;
  for (const auto& t : g->torsion)
    if (t == order) return true;
  return false;
}

}  // namespace

TEST_SUITE("chow_x") {
  TEST_CASE("n = 11 has Z/5 in degree 16") {
    const ChowY c(11);
    const AbelianGroupReport r = compute_chow_x(c);
    const DegreeGroup* g = r.find(16);
    REQUIRE(g != nullptr);
    CHECK(g->free_rank == 0);
    CHECK(g->torsion == std::vector<Int>{5});
  }

  TEST_CASE("n = 10 (4t+2) has Z/4 from v v' and Z/2 elsewhere") {
    const AbelianGroupReport r = compute_chow_x(ChowY(10));
    CHECK(has_torsion(r, 14, 4));
    CHECK(has_torsion(r, 10, 2));
    CHECK(has_torsion(r, 18, 2));
    CHECK(r.torsion_order() == 16);
    CHECK(has_torsion(compute_chow_x(ChowY(14)), 22, 4));
  }

  TEST_CASE("matches the expected structure for n = 8..18") {
    for (int n = 8; n <= 18; ++n) {
      CAPTURE(n);
      const ChowXResult res = analyze_chow_x(ChowY(n));
      std::string diff;
      for (const auto& d : res.diff) diff += d + "; ";
      CHECK_MESSAGE(res.matches(), diff);
      CHECK(res.expectation.residue == n % 4);
      CHECK(res.expectation.t == n / 4);
      for (const auto& a : res.annotations) {
        INFO(a.generator.name);
        CHECK(a.matches());
      }
    }
  }

  TEST_CASE("free rank over Q agrees with the presentation with c1 killed (odd n)") {
    for (int n : {9, 11, 13, 15}) {
      CAPTURE(n);
      const ChowY c(n);
      const AbelianGroupReport r = compute_chow_x(c);
      auto rels = c.ring().relations();
      rels.push_back(GradedPoly::c1());
      const auto dims = presentation_dims(rels, c.ring().top_degree() + 2, 0);
      for (const auto& [d, k] : dims) {
        const DegreeGroup* g = r.find(d);
        CHECK((g ? g->free_rank : 0) == k);
      }
    }
  }

  TEST_CASE("c1 matrices are integral and go up by one step") {
    const ChowY c(9);
    const GradedMapFamily f = c1_matrix_family(c);
    CHECK(f.step == 2);
    for (const auto& [d, mat] : f.maps) {
      CHECK(mat.cols() == c.indices(d).size());
      CHECK(mat.rows() == c.indices(d + 2).size());
    }
  }

  TEST_CASE("degree 2 loses exactly c1") {
    for (int n = 6; n <= 16; ++n) {
      const ChowY c(n);
      const DegreeGroup* g = compute_chow_x(c).find(2);
      const std::size_t free = g ? g->free_rank : 0;
      CHECK(free + 1 == c.indices(2).size());
      if (g) CHECK(g->torsion.empty());
    }
  }

  TEST_CASE("cokernel does not depend on the order of the basis") {
    std::mt19937_64 rng(0x0DE);
    for (int n : {10, 11, 14}) {
      const ChowY c(n);
      const GradedMapFamily f = c1_matrix_family(c);
      std::map<int, std::vector<std::size_t>> perm;
      for (const auto& [d, k] : f.dims) {
        perm[d].resize(k);
        std::iota(perm[d].begin(), perm[d].end(), 0);
        std::shuffle(perm[d].begin(), perm[d].end(), rng);
      }
      GradedMapFamily g = f;
      for (auto& [d, mat] : g.maps) {
        const IntMatrix& src = f.maps.at(d);
        for (std::size_t r = 0; r < mat.rows(); ++r)
          for (std::size_t col = 0; col < mat.cols(); ++col) mat(perm[d + 2][r], perm[d][col]) = src(r, col);
      }
      CHECK(match_reports(cokernel(g), cokernel(f)).empty());
    }
  }

  TEST_CASE("dropping one torsion factor is reported") {
    const ChowXResult r = analyze_chow_x(ChowY(11));
    AbelianGroupReport broken = r.groups;
    for (auto& d : broken.degrees)
      if (d.degree == 16) d.torsion.clear();
    const auto diff = match_reports(broken, r.expectation.report(ChowY(11).ring().top_degree()));
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].find("16") != std::string::npos);
    CHECK(diff[0].find("5") != std::string::npos);
  }

  TEST_CASE("expectation needs n >= 8") {
    CHECK_THROWS_AS(expected_chow_x(7), std::invalid_argument);
    CHECK(residue_name(3) == "4t+3");
    const ChowXResult small = analyze_chow_x(ChowY(6));
    CHECK(small.groups.find(0) != nullptr);
  }

  TEST_CASE("match_reports treats a missing degree as zero") {
    AbelianGroupReport a, b;
    a.degrees.push_back({4, 0, {}});
    CHECK(match_reports(a, b).empty());
    a.degrees.push_back({6, 1, {}});
    CHECK(match_reports(a, b).size() == 1);
  }
}
