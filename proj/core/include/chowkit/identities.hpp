#pragma once

// Executable versions of the identities behind the integral basis: class
// identities in Z[c1, c2] and the bracket calculus for n = 2m + 1, evaluated
// in R_Q and through the substitution c1 = 1 + x, c2 = x.

#include <string>
#include <vector>

#include "chowkit/chow_y.hpp"

namespace chowkit {

struct IdentityCheck {
  std::string name;
  std::string params;
  bool passed = false;
  /// False for readings that are reported but not expected to hold.
  bool asserted = true;
  std::string note;
};

struct IdentityReport {
  int n = 0;
  std::vector<IdentityCheck> checks;
  /// Every asserted check passed (and there was at least one).
  bool ok() const;
};

/// b_k, d_k closed forms against root sums (k <= max_k), the alternating
/// b-sum for d_h (h <= max_h) and the binomial expansion (g <= max_g).
IdentityReport check_class_identities(int max_k = 30, int max_h = 20, int max_g = 40);

/// Bracket identities for Y_n. The product collapse and key formula need
/// n odd; the divided-bracket family needs n = 2m + 1 with m even. For other
/// n only the polynomial bracket expansions are checked.
IdentityReport check_proof_identities(const ChowY& c);

}  // namespace chowkit
