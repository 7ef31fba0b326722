#pragma once

// Exact integers and rationals, dense univariate polynomials, and sparse
// polynomials in the generators c1 (degree 2), c2 (degree 4) and an optional
// Euler class chi.
//
// Degrees are topological throughout: |c1| = 2, |c2| = 4, |chi| = 2m - 4.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chowkit {

using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient C(n, k). Zero when k < 0 or k > n >= 0; negative n
/// follows the usual polynomial extension.
Int binomial(long n, long k);

/// num / den in lowest terms.
Rat frac(const Int& num, const Int& den);

/// (-1)^k for any integer k.
constexpr int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Dense polynomial over Q in one variable x. The highest stored coefficient
/// is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int k);
  static UniPoly x() { return monomial(1, 1); }
  /// x^k - 1
  static UniPoly x_pow_minus_one(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly pow(int e) const;
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Throws std::domain_error when the division leaves a remainder.
  UniPoly exact_div(const UniPoly& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Monomial c1^a c2^b chi^e. Ordered lexicographically on (e, b, a).
struct Monomial {
  int a = 0;
  int b = 0;
  int e = 0;

  int degree(int chi_degree) const { return 2 * a + 4 * b + e * chi_degree; }
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, e + o.e}; }

  friend auto operator<=>(const Monomial& x, const Monomial& y) {
    return std::tie(x.e, x.b, x.a) <=> std::tie(y.e, y.b, y.a);
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& mono);

/// Sparse polynomial in c1, c2 and (optionally) chi with rational
/// coefficients. chi_degree() is 0 for chi-free polynomials that have not
/// been tied to an even-n context. Multiplication never creates chi^2; use
/// multiply() with the value of chi^2 for that.
class GradedPoly {
 public:
  GradedPoly() = default;

  static GradedPoly constant(const Rat& c);
  static GradedPoly monomial(const Rat& c, Monomial mono, int chi_degree = 0);
  static GradedPoly c1() { return monomial(1, {1, 0, 0}); }
  static GradedPoly c2() { return monomial(1, {0, 1, 0}); }
  /// c1^a c2^b with coefficient 1.
  static GradedPoly c1c2(int a, int b) { return monomial(1, {a, b, 0}); }
  /// The Euler class chi of degree 2m - 4.
  static GradedPoly chi(int m);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  int chi_degree() const { return chi_degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_chi() const;
  Rat coeff(const Monomial& mono) const;

  /// Degree of each stored term; empty for the zero polynomial.
  std::vector<int> degrees() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial; throws otherwise.
  int degree() const;
  std::map<int, GradedPoly> homogeneous_parts() const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rat& c);
  GradedPoly operator-() const;
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Rat& c) { return a *= c; }
  friend GradedPoly operator*(const Rat& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }

  GradedPoly pow(int e) const;
  bool has_integer_coefficients() const;
  /// All coefficients have odd denominators.
  bool is_two_local() const;

  std::string to_string() const;

  friend GradedPoly multiply(const GradedPoly& p, const GradedPoly& q, const GradedPoly& chi_square);

 private:
  void add_term(const Monomial& mono, const Rat& c);
  void merge_context(int chi_degree);

  std::map<Monomial, Rat> terms_;
  int chi_degree_ = 0;
};

/// Product in Q[c1, c2, chi]/(chi^2 - chi_square).
GradedPoly multiply(const GradedPoly& p, const GradedPoly& q, const GradedPoly& chi_square);

/// Polynomial in two Chern roots alpha, beta with integer coefficients;
/// key (i, j) stands for alpha^i beta^j. Must be symmetric.
class SymPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Int>;

  SymPoly() = default;
  /// Throws std::invalid_argument if the input is not symmetric.
  explicit SymPoly(Terms terms);

  const Terms& terms() const { return terms_; }

 private:
  Terms terms_;
};

/// Rewrites a symmetric polynomial in c1 = alpha + beta, c2 = alpha beta.
GradedPoly sym_to_c(const SymPoly& p);

/// Dehomogenizes a chi-free homogeneous polynomial of the given (even)
/// degree by c1 -> 1 + x, c2 -> x, i.e. x = beta / alpha.
UniPoly to_inhomogeneous(const GradedPoly& p, int deg);

/// Inverse of to_inhomogeneous on degree `deg`: u must have degree at most
/// deg / 2 and be palindromic with respect to deg / 2.
GradedPoly from_inhomogeneous(const UniPoly& u, int deg);

}  // namespace chowkit
