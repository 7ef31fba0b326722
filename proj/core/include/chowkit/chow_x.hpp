#pragma once

// CH(X_n) as the cokernel of multiplication by c1 on CH(Y_n), and the
// expected free and torsion parts in the four cases n = 4t, 4t+1, 4t+2, 4t+3.

#include <string>
#include <vector>

#include "chowkit/arith.hpp"
#include "chowkit/chow_y.hpp"
#include "chowkit/lattice.hpp"

namespace chowkit {

/// Matrices of x -> c1 x in the integral basis, from each degree to the
/// next. Throws std::logic_error on a non-integral entry.
GradedMapFamily c1_matrix_family(const ChowY& c);

/// Per-degree cokernel of c1_matrix_family.
AbelianGroupReport compute_chow_x(const ChowY& c);

/// A named generator c2^k v^ev w^ew of CH(X_n), where v, w are the two
/// v-classes of Y_n (lower degree first).
struct ExpectedGenerator {
  std::string name;
  int degree = 0;
  int k = 0;
  bool ev = false;
  bool ew = false;
  /// Additive order; 0 for a free generator.
  Int order = 0;
};

struct ChowXExpectation {
  int n = 0;
  int t = 0;
  /// 0..3 for n = 4t, 4t+1, 4t+2, 4t+3.
  int residue = 0;
  std::vector<ExpectedGenerator> generators;
  /// The generators collected per degree (torsion as invariant factors),
  /// over degrees 0..top_degree.
  AbelianGroupReport report(int top_degree) const;
};

/// "4t", "4t+1", "4t+2" or "4t+3".
std::string residue_name(int residue);

/// Throws std::invalid_argument for n < 8, where some listed generator
/// would have a negative exponent.
ChowXExpectation expected_chow_x(int n);

/// Human-readable differences; empty when the reports agree in every degree
/// (a degree missing from one side counts as the zero group).
std::vector<std::string> match_reports(const AbelianGroupReport& actual, const AbelianGroupReport& expected);

struct GeneratorAnnotation {
  ExpectedGenerator generator;
  /// Order of the generator's image in the computed cokernel; 0 = infinite.
  Int actual_order = 0;
  bool matches() const { return actual_order == generator.order; }
};

/// Locates each expected generator in the computed cokernel.
std::vector<GeneratorAnnotation> annotate_generators(const ChowY& c, const ChowXExpectation& e);

struct ChowXResult {
  int n = 0;
  ChowXExpectation expectation;
  AbelianGroupReport groups;
  std::vector<std::string> diff;
  std::vector<GeneratorAnnotation> annotations;
  bool matches() const { return diff.empty(); }
};

/// Cokernel, expectation (when n >= 8), diff and annotations in one pass.
ChowXResult analyze_chow_x(const ChowY& c);

}  // namespace chowkit
