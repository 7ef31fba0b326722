#pragma once

// One-call verification of everything known about a single n: index,
// closure, multiplication tables, mod-p dimensions and the CH(X_n) groups.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/chow_x.hpp"
#include "chowkit/chow_y.hpp"

namespace chowkit {

struct CheckOutcome {
  std::string name;  // "index", "closure", "tables", "mod-2", ..., "chow-x"
  bool passed = false;
  std::string detail;
};

struct VerifyResult {
  int n = 0;
  std::shared_ptr<const ChowY> chow;
  IndexReport index;
  ClosureReport closure;
  /// Empty (and not checked) for n < 8, where no table entry is stated.
  TableReport tables;
  std::vector<ModPReport> mod_p;
  /// Present for n >= 8.
  std::optional<ChowXResult> chow_x;
  AbelianGroupReport chow_x_groups;
  std::vector<CheckOutcome> checks;
  /// Set when an exception stopped the run; all checks then count as failed.
  std::string error;

  bool passed() const;
};

VerifyResult verify_n(int n, const std::vector<unsigned long>& primes = {2, 3, 5, 7});

}  // namespace chowkit
