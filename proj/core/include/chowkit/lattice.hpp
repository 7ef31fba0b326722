#pragma once

// Exact integer-lattice linear algebra: Hermite and Smith normal forms,
// determinants, graded lattices inside rational vector spaces, and cokernels
// of graded integer maps. Nothing here uses floating point.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/arith.hpp"

namespace chowkit {

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Column-style Hermite normal form: lower echelon with the same column span
/// over Z, positive pivots, the other entries of each pivot row reduced into
/// [0, pivot), and zero columns last.
IntMatrix hnf(const IntMatrix& a);

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Int> factors;
  std::size_t rank = 0;
  /// Unimodular transforms with left * A * right == diag(factors).
  IntMatrix left;
  IntMatrix right;

  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Smith normal form with smallest-absolute-value pivoting.
SmithForm snf(const IntMatrix& a);

/// Exact determinant (fraction-free elimination).
Int determinant(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Reduces `rows` to reduced row echelon form over Q in place (zero rows
/// dropped) and returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(std::vector<RatVector>& rows, std::size_t cols);
std::size_t rank(std::vector<RatVector> rows, std::size_t cols);
/// Rank over Z/p of an integer matrix given by rows.
std::size_t rank_mod_p(const std::vector<IntVector>& rows, std::size_t cols, unsigned long p);

/// Orders of cyclic groups -> invariant factors (> 1) of their direct sum.
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);

/// Free abelian group graded by degree, given by basis vectors with rational
/// coordinates in a fixed ambient basis of each degree.
class GradedLattice {
 public:
  GradedLattice() = default;
  /// Throws std::invalid_argument on dimension mismatch or dependent vectors.
  GradedLattice(std::map<int, std::size_t> ambient_dims, std::map<int, std::vector<RatVector>> basis);

  /// Z-span of arbitrary generators (reduced to a basis by HNF).
  static GradedLattice span(std::map<int, std::size_t> ambient_dims,
                            const std::map<int, std::vector<RatVector>>& generators);

  /// Q-span intersected with the ambient integer lattice.
  GradedLattice saturation() const;

  const std::map<int, std::size_t>& ambient_dims() const { return ambient_dims_; }
  std::size_t ambient_dim(int deg) const;
  /// Degrees of nonzero rank, ascending.
  std::vector<int> degrees() const;
  std::size_t rank(int deg) const;
  std::size_t total_rank() const;
  const std::vector<RatVector>& basis(int deg) const;

  /// Coordinates of v in the Q-span of the degree-`deg` basis, or nullopt
  /// when v is outside it. Throws std::invalid_argument on dimension mismatch.
  std::optional<RatVector> rational_coords(const RatVector& v, int deg) const;
  /// Integer coordinates when v is a lattice member, nullopt otherwise.
  /// Throws std::invalid_argument on dimension mismatch.
  std::optional<IntVector> coords_in(const RatVector& v, int deg) const;
  bool contains(const RatVector& v, int deg) const { return coords_in(v, deg).has_value(); }
  bool contains(const GradedLattice& other) const;

  friend bool operator==(const GradedLattice& a, const GradedLattice& b);

 private:
  struct Piece {
    std::vector<RatVector> basis;
    std::vector<std::size_t> pivots;    // coordinates where the basis is invertible
    std::vector<RatVector> pivot_inverse;  // inverse of the basis restricted to pivots
  };
  static Piece make_piece(std::vector<RatVector> basis, std::size_t dim);
  void check_dim(const RatVector& v, int deg) const;

  std::map<int, std::size_t> ambient_dims_;
  std::map<int, Piece> pieces_;
};

/// [sup : sub] for sub contained in sup with equal ranks in every degree.
/// Throws std::invalid_argument on rank mismatch or non-containment.
Int index_of(const GradedLattice& sub, const GradedLattice& sup);

struct DegreeGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  /// Invariant factors > 1.
  std::vector<Int> torsion;

  friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;
};

/// Per-degree structure of a graded finitely generated abelian group.
struct AbelianGroupReport {
  std::vector<DegreeGroup> degrees;

  std::size_t total_free_rank() const;
  Int torsion_order() const;
  const DegreeGroup* find(int degree) const;
};

/// Graded family of integer maps raising degree by `step`. maps[d] sends
/// degree-d coordinates (dims[d] columns) to degree-(d + step) coordinates
/// (dims[d + step] rows). A missing map is the zero map.
struct GradedMapFamily {
  int step = 2;
  std::map<int, std::size_t> dims;
  std::map<int, IntMatrix> maps;
};

/// Cokernel in every degree of dims. Throws std::invalid_argument when a
/// map's shape disagrees with dims.
AbelianGroupReport cokernel(const GradedMapFamily& family);

}  // namespace chowkit
