#pragma once

// The rational Chow ring R_Q of Y_n:
//
//   n = 2m + 1:  Q[c1, c2] / (d_{m-1}, c2^2 d_{m-2})
//   n = 2m:      Q[c1, c2, chi] / (c2 chi, chi^2 - d_{m-2}, d_{m-1})
//
// Every degree carries a canonical monomial basis; elements are stored as
// canonical coordinate vectors per degree.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/arith.hpp"
#include "chowkit/lattice.hpp"

namespace chowkit {

/// Possibly inhomogeneous element: canonical coordinates per degree. Zero
/// parts are never stored.
class RingElem {
 public:
  RingElem() = default;
  static RingElem homogeneous(int degree, RatVector coords);

  const std::map<int, RatVector>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Coordinates in `degree` (empty when that part is zero).
  RatVector part(int degree) const;
  bool is_homogeneous() const { return parts_.size() <= 1; }
  /// Degree of a nonzero homogeneous element; throws otherwise.
  int degree() const;
  bool has_integer_coords() const;
  /// All coordinates have odd denominators.
  bool is_two_local() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const Rat& c);
  RingElem operator-() const { return *this * Rat(-1); }
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const Rat& c) { return a *= c; }
  friend RingElem operator*(const Rat& c, RingElem a) { return a *= c; }
  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  void add_scaled(int degree, const RatVector& v, const Rat& c);
  std::map<int, RatVector> parts_;
};

/// A half-integral generator v_{2r} (degree 2r).
struct VClass {
  std::string name;
  int degree = 0;
  GradedPoly poly;
  RingElem elem;
};

class QuotientRing {
 public:
  /// Throws std::invalid_argument for n < 6 and std::logic_error when the
  /// canonical monomials fail to form a basis in some degree.
  explicit QuotientRing(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  bool even() const { return n_ % 2 == 0; }
  /// deg chi = 2m - 4 for even n, 0 otherwise.
  int chi_degree() const { return even() ? 2 * m_ - 4 : 0; }
  int top_degree() const { return top_; }

  std::size_t dim(int degree) const;
  std::map<int, std::size_t> dims() const;
  std::size_t total_rank() const;
  const std::vector<Monomial>& basis(int degree) const;
  /// Index of a canonical monomial in its degree's basis, or -1.
  int basis_index(const Monomial& mono) const;

  /// Generators of the relation ideal with chi^2 already folded into
  /// d_{m-2}: (d_{m-1}, c2^2 d_{m-2}) or (c2 chi, d_{m-1}).
  std::vector<GradedPoly> relations() const;
  /// d_{m-2}, the value of chi^2 (even n only).
  GradedPoly chi_square() const;

  RingElem normal_form(const GradedPoly& p) const;
  /// Normal form of c1^a c2^b chi^e, e in {0, 1, 2}.
  RingElem monomial_nf(const Monomial& mono) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem pow(const RingElem& a, int e) const;
  /// The polynomial sum of coordinates times canonical monomials.
  GradedPoly lift(const RingElem& x) const;

  RingElem one() const { return normal_form(GradedPoly::constant(1)); }
  RingElem c1() const { return normal_form(GradedPoly::c1()); }
  RingElem c2() const { return normal_form(GradedPoly::c2()); }

  /// v_{2m-4}, v_{2m-2} for n = 2m; v_{2m-2}, v_{2m} for n = 2m + 1.
  std::pair<VClass, VClass> v_classes() const;

  /// Dimension in `degree` of the same presentation over Z/p.
  std::size_t dim_mod_p(int degree, unsigned long p) const;

  std::string to_string(const RingElem& x) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Rat>>;
  struct Piece {
    std::vector<Monomial> raw;      // every monomial (chi exponent <= 1) of this degree
    std::vector<IntVector> relation_rows;  // relation multiples in raw coordinates
    std::vector<Monomial> basis;
    std::vector<Sparse> raw_nf;     // normal form of each raw monomial
  };

  bool is_canonical(const Monomial& mono) const;
  std::vector<Monomial> raw_monomials(int degree) const;
  Piece build_piece(int degree) const;
  const Sparse& nf_of(const Monomial& mono) const;
  void add_nf(std::map<int, RatVector>& acc, const Monomial& mono, const Rat& c) const;

  int n_ = 0;
  int m_ = 0;
  int top_ = 0;
  std::map<int, Piece> pieces_;
  std::map<Monomial, std::pair<int, std::size_t>> basis_lookup_;
  std::map<Monomial, Sparse> raw_lookup_;
  std::map<Monomial, Sparse> chi_square_nf_;  // c1^a c2^b chi^2 keyed by (a, b, 0)
};

/// Per-degree dimensions over Z/p (p = 0 for Q) of
/// Z[c1, c2] / (relations), for degrees 0, 2, ..., max_degree.
std::map<int, std::size_t> presentation_dims(const std::vector<GradedPoly>& relations, int max_degree,
                                             unsigned long p);

}  // namespace chowkit
