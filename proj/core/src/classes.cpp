#include "chowkit/classes.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace chowkit {
namespace {

// Write-once memo shared by all callers.
class ClassTable {
 public:
  static ClassTable& instance() {
    static ClassTable table;
    return table;
  }

  GradedPoly b(int k) { return lookup(b_, k, &closed_form_b); }
  GradedPoly d(int k) { return lookup(d_, k, &closed_form_d); }

 private:
  using Memo = std::unordered_map<int, GradedPoly>;

  GradedPoly lookup(Memo& memo, int k, GradedPoly (*compute)(int)) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo.find(k); it != memo.end()) return it->second;
    }
    GradedPoly value = compute(k);
    std::lock_guard lock(mutex_);
    return memo.try_emplace(k, std::move(value)).first->second;
  }

  static GradedPoly closed_form_b(int k) {
    GradedPoly out;
    for (int mu = 0; 2 * mu <= k; ++mu) {
      const Int c = sign_pow(k + mu) * binomial(k - mu, mu);
      out += GradedPoly::monomial(Rat(c), {k - 2 * mu, mu, 0});
    }
    return out;
  }

  static GradedPoly closed_form_d(int k) {
    GradedPoly out;
    for (int mu = 0; mu <= k; ++mu) {
      const Int c = sign_pow(k + mu) * binomial(2 * k - mu + 1, mu);
      out += GradedPoly::monomial(Rat(c), {2 * k - 2 * mu, mu, 0});
    }
    return out;
  }

  std::mutex mutex_;
  Memo b_;
  Memo d_;
};

GradedPoly root_sum(int k, int step) {
  SymPoly::Terms terms;
  for (int i = 0; i <= k; ++i) terms[{step * i, step * (k - i)}] = sign_pow(k);
  return sym_to_c(SymPoly(std::move(terms)));
}

}  // namespace

GradedPoly b_class(int k) {
  if (k < 0) return {};
  return ClassTable::instance().b(k);
}

GradedPoly d_class(int k) {
  if (k < 0) return {};
  return ClassTable::instance().d(k);
}

GradedPoly b_class_from_roots(int k) { return k < 0 ? GradedPoly{} : root_sum(k, 1); }
GradedPoly d_class_from_roots(int k) { return k < 0 ? GradedPoly{} : root_sum(k, 2); }

GradedPoly b_bar(int k) { return b_class(k) * Rat(sign_pow(k)); }
GradedPoly d_bar(int k) { return d_class(k) * Rat(sign_pow(k)); }

Int expansion_coefficient(int g, int mu) {
  if (g < 1) throw std::invalid_argument("expansion_coefficient: g must be >= 1");
  if (mu < -1 || 2 * mu > g) throw std::invalid_argument("expansion_coefficient: mu out of range");
  if (mu == -1) return 0;
  if (mu == 0) return -1;
  const Int numer = Int(g) * binomial(g - 1 - mu, mu - 1);
  if (numer % mu != 0) throw std::logic_error("expansion_coefficient: non-integral value");
  return sign_pow(1 + mu) * (numer / mu);
}

UniPoly binomial_defect(int n) {
  if (n < 1) throw std::invalid_argument("binomial_defect: n must be >= 1");
  const UniPoly one_plus_x(std::vector<Rat>{1, 1});
  return one_plus_x.pow(n) - UniPoly::constant(1) - UniPoly::monomial(1, n);
}

bool check_alternating_b_sum(int h) {
  if (h < 0) throw std::invalid_argument("check_alternating_b_sum: h must be >= 0");
  GradedPoly lhs;
  for (int mu = 0; mu <= h; ++mu) lhs += Rat(sign_pow(mu)) * (GradedPoly::c2().pow(h - mu) * b_class(2 * mu));
  return lhs == d_class(h);
}

bool check_binomial_expansion(int g) {
  if (g < 1) throw std::invalid_argument("check_binomial_expansion: g must be >= 1");
  const UniPoly one_plus_x(std::vector<Rat>{1, 1});
  UniPoly rhs = UniPoly::constant(1) + UniPoly::monomial(1, g);
  for (int mu = 1; 2 * mu <= g; ++mu) {
    rhs += UniPoly::monomial(Rat(expansion_coefficient(g, mu)), mu) * one_plus_x.pow(g - 2 * mu);
  }
  return rhs == one_plus_x.pow(g);
}

}  // namespace chowkit
