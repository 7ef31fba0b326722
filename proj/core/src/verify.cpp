#include "chowkit/verify.hpp"

#include <exception>

namespace chowkit {

bool VerifyResult::passed() const {
  if (!error.empty() || checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

VerifyResult verify_n(int n, const std::vector<unsigned long>& primes) {
  VerifyResult r;
  r.n = n;
  try {
    r.chow = std::make_shared<const ChowY>(n);
    const ChowY& c = *r.chow;

    r.index = index_vs_An(c);
    r.checks.push_back({"index", r.index.ok(),
                        "lattice " + r.index.lattice_index.get_str() + ", expected " + r.index.expected.get_str()});

    r.closure = verify_closure(c);
    r.checks.push_back({"closure", r.closure.closed && r.closure.commutative && r.closure.associative,
                        r.closure.closed ? std::to_string(r.closure.pairs) + " products" : r.closure.failure});

    if (n >= 8) {
      r.tables = verify_tables(c);
      std::size_t bad = 0;
      std::string first;
      for (const auto& e : r.tables.entries) {
        if (e.holds && e.two_local) continue;
        if (bad++ == 0) first = e.id + (e.params.empty() ? "" : " " + e.params);
      }
      r.checks.push_back({"tables", r.tables.all_hold(),
                          std::to_string(r.tables.entries.size()) + " entries" +
                              (bad ? ", " + std::to_string(bad) + " failing (first " + first + ")" : "")});
    }

    for (unsigned long p : primes) {
      r.mod_p.push_back(mod_p_structure(c, p));
      r.checks.push_back({"mod-" + std::to_string(p), r.mod_p.back().matches, ""});
    }

    if (n >= 8) {
      r.chow_x = analyze_chow_x(c);
      r.chow_x_groups = r.chow_x->groups;
      r.checks.push_back({"chow-x", r.chow_x->matches(),
                          r.chow_x->matches() ? "case " + residue_name(r.chow_x->expectation.residue)
                                              : r.chow_x->diff.front()});
    } else {
      r.chow_x_groups = compute_chow_x(c);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace chowkit
