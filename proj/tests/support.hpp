#pragma once

// Test-side helpers: seeded random integer matrices and brute-force oracles
// that share no code with the library routines they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chowkit/lattice.hpp"

namespace testsupport {

using chowkit::Int;
using chowkit::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = dist(rng);
  return a;
}

/// Product of random elementary column operations: unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i != j) u.add_col_multiple(i, j, factor(rng));
  }
  return u;
}

/// Leibniz expansion; fine for n <= 6.
inline Int leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline bool is_diagonal_chain(const IntMatrix& d, const std::vector<Int>& factors) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const Int expect = (r == c && r < factors.size()) ? factors[r] : Int(0);
      if (d(r, c) != expect) return false;
    }
  for (std::size_t k = 0; k + 1 < factors.size(); ++k)
    if (factors[k] <= 0 || factors[k + 1] % factors[k] != 0) return false;
  return factors.empty() || factors.back() > 0;
}

/// Lower echelon with positive pivots, reduced off-pivot entries in each
/// pivot row, zero columns last.
inline bool is_hnf(const IntMatrix& h) {
  std::size_t row = 0;
  bool zero_seen = false;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < h.rows(); ++r)
      if (h(r, c) != 0) zero = false;
    if (zero) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    while (row < h.rows() && h(row, c) == 0) ++row;
    if (row == h.rows()) return false;
    for (std::size_t r = 0; r < row; ++r)
      if (h(r, c) != 0) return false;
    const Int& p = h(row, c);
    if (p <= 0) return false;
    for (std::size_t k = 0; k < c; ++k)
      if (h(row, k) < 0 || h(row, k) >= p) return false;
    ++row;
  }
  return true;
}

/// Empty on success, otherwise what went wrong.
inline std::string check_snf(const IntMatrix& a) {
  const auto s = chowkit::snf(a);
  if (s.left.rows() != a.rows() || s.right.rows() != a.cols()) return "transform shape";
  if (abs(chowkit::determinant(s.left)) != 1 || abs(chowkit::determinant(s.right)) != 1) return "transform not unimodular";
  if (!is_diagonal_chain(s.left * a * s.right, s.factors)) return "left*A*right is not the divisibility chain";
  if (s.factors.size() != s.rank) return "rank mismatch";
  // product of the factors = gcd of maximal minors; checked for square input
  if (a.rows() == a.cols()) {
    Int prod = 1;
    for (const auto& f : s.factors) prod *= f;
    if (s.rank < a.rows()) prod = 0;
    if (prod != abs(chowkit::determinant(a))) return "factor product differs from |det|";
  }
  return "";
}

/// HNF is a normal form: same result after a random unimodular column change.
inline std::string check_hnf(std::mt19937_64& rng, const IntMatrix& a) {
  const IntMatrix h = chowkit::hnf(a);
  if (h.rows() != a.rows()) return "hnf shape";
  if (!is_hnf(h)) return "hnf shape conditions";
  const IntMatrix u = random_unimodular(rng, a.cols());
  if (chowkit::hnf(a * u) != h) return "hnf not invariant under unimodular change";
  return "";
}

/// [L3 : L1] = [L3 : L2] [L2 : L1] for random full-rank L1 in L2 in L3 = Z^k,
/// each index also compared against |det| of the basis change.
inline std::string check_index_multiplicativity(std::mt19937_64& rng, std::size_t k) {
  using chowkit::RatVector;
  auto full_rank = [&](long bound) {
    for (;;) {
      IntMatrix m = random_matrix(rng, k, k, bound);
      if (chowkit::determinant(m) != 0) return m;
    }
  };
  const IntMatrix b2 = full_rank(4);
  const IntMatrix t = full_rank(3);
  const IntMatrix b1 = b2 * t;
  auto lattice = [&](const IntMatrix& b) {
    std::vector<RatVector> cols;
    for (std::size_t c = 0; c < k; ++c) {
      RatVector v;
      for (const auto& x : b.column(c)) v.emplace_back(x);
      cols.push_back(v);
    }
    return chowkit::GradedLattice({{0, k}}, {{0, cols}});
  };
  const auto l1 = lattice(b1), l2 = lattice(b2), l3 = lattice(IntMatrix::identity(k));
  const Int i31 = chowkit::index_of(l1, l3), i32 = chowkit::index_of(l2, l3), i21 = chowkit::index_of(l1, l2);
  if (i31 != i32 * i21) return "index not multiplicative";
  if (i32 != abs(chowkit::determinant(b2)) || i21 != abs(chowkit::determinant(t))) return "index differs from |det|";
  return "";
}

}  // namespace testsupport
