#pragma once

// The integral Chow ring of Y_n as a lattice inside R_Q, spanned by the
// monomials c1^a c2^i v^e w^f of A_n with some of them replaced by divided
// elements <xi>/l.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/arith.hpp"
#include "chowkit/lattice.hpp"
#include "chowkit/quotient.hpp"

namespace chowkit {

/// The four shapes of the basis: parity of n crossed with parity of m.
enum class ChowCase { even_n_even_m, even_n_odd_m, odd_n_even_m, odd_n_odd_m };

ChowCase chow_case(int n);
/// "n=2m, m even" and so on.
std::string case_name(ChowCase c);

struct BasisElem {
  std::string label;
  int degree = 0;
  /// The underlying A_n monomial c1^a c2^b v^ev w^ew.
  int a = 0;
  int b = 0;
  bool ev = false;
  bool ew = false;
  /// Which divided-element formula (1..8) replaced the monomial; 0 if none.
  int formula = 0;
  /// The i or j parameter of that formula.
  int param = 0;
  Int l = 1;
  RingElem elem;

  bool divided() const { return formula != 0; }
};

using SparseIntVector = std::vector<std::pair<std::size_t, Int>>;

class ChowY {
 public:
  /// Throws std::invalid_argument for n < 6 and std::logic_error when the
  /// candidate basis is dependent or a divided element is not integral.
  explicit ChowY(int n);

  int n() const { return ring_->n(); }
  int m() const { return ring_->m(); }
  ChowCase chow_case() const { return chowkit::chow_case(n()); }
  const QuotientRing& ring() const { return *ring_; }
  const VClass& v() const { return v_; }
  const VClass& w() const { return w_; }

  const std::vector<BasisElem>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  /// Global indices of the basis elements of one degree, in lattice order.
  const std::vector<std::size_t>& indices(int degree) const;
  const GradedLattice& lattice() const { return lattice_; }
  const GradedLattice& an_lattice() const { return an_; }

  /// Integer coordinates of x in the basis (zero entries omitted), or
  /// nullopt when x is not in the lattice.
  std::optional<SparseIntVector> coords(const RingElem& x) const;

  /// Normal form of c1^a c2^b v^ev w^ef.
  RingElem monomial(int a, int b, bool ev, bool ew) const;

 private:
  std::shared_ptr<const QuotientRing> ring_;
  VClass v_;
  VClass w_;
  std::vector<BasisElem> basis_;
  std::map<int, std::vector<std::size_t>> by_degree_;
  GradedLattice lattice_;
  GradedLattice an_;
};

/// A_n spanned by c1^a c2^i v^e w^f, 0 <= i <= m-2, 0 <= a <= m-2-i.
GradedLattice build_An(const QuotientRing& ring);
/// A_n plus the Z-span of every monomial c1^a c2^b chi^e. Equal to the
/// integral Chow ring because the quotient by A_n has odd order and the
/// monomials already span it away from 2.
GradedLattice reference_lattice(const QuotientRing& ring);

struct Product {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseIntVector coords;
};

struct ClosureReport {
  bool closed = false;
  std::string failure;
  std::size_t pairs = 0;
  /// Products e_i e_j for i <= j (degree sum within the ring).
  std::vector<Product> products;
  bool commutative = false;
  bool associative = false;
  std::size_t triples_checked = 0;
};

/// Multiplies every pair of basis elements and expresses the result in the
/// basis. Associativity is checked on all triples for n <= 12 and on a fixed
/// pseudo-random sample otherwise.
ClosureReport verify_closure(const ChowY& c);

struct IndexReport {
  Int lattice_index;      // [CH : A_n] from the lattices
  Int divisor_product;    // product of the l of the divided elements
  Int reference_index;    // [reference : A_n]
  Int expected;           // closed form
  bool basis_equals_reference = false;

  bool ok() const {
    return basis_equals_reference && lattice_index == expected && divisor_product == expected &&
           reference_index == expected;
  }
};

/// Closed form of [CH(Y_n) : A_n].
Int expected_index(int n);
IndexReport index_vs_An(const ChowY& c);

struct ModPReport {
  unsigned long p = 0;
  std::map<int, std::size_t> basis_dims;
  std::map<int, std::size_t> presentation_dims;
  bool matches = false;
};

/// Per-degree dimensions of CH(Y_n) (x) Z/p from the basis against those of
/// the mod-p presentation: Z/2[c1, c2]/(b_{m-1}, c2 b_{m-2}) tensored with an
/// exterior-style basis {1, v, w, vw} for p = 2, the R_Q presentation for odd p.
ModPReport mod_p_structure(const ChowY& c, unsigned long p);

/// Per-entry result of a multiplication-table check.
struct TableEntry {
  std::string table;   // "even" or "odd"
  std::string id;      // entry label, e.g. "(5)" or "(xiv)"
  std::string params;  // e.g. "i=1 j=0"
  std::string lhs;
  bool holds = false;
  bool two_local = false;
  bool integral = false;
  std::string note;
};

struct TableReport {
  std::vector<TableEntry> entries;
  bool all_hold() const;
};

/// Evaluates every admissible instance of the multiplication table for the
/// parity of n, plus the integral rewrite of entry (5) for n = 2m.
TableReport verify_tables(const ChowY& c);

}  // namespace chowkit
