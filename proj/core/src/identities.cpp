#include "chowkit/identities.hpp"

#include <stdexcept>

#include "chowkit/classes.hpp"

namespace chowkit {
namespace {

std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

GradedPoly c1_pow(int k) { return GradedPoly::c1c2(k, 0); }
GradedPoly c2_pow(int k) { return GradedPoly::c1c2(0, k); }

// x^k (x^a - 1)(x^b - 1) / ((x - 1)(x^2 - 1)), a + b odd.
UniPoly quotient_shape(int k, int a, int b) {
  if (a < 0 || b < 0) throw std::domain_error("quotient_shape: negative exponent");
  const UniPoly num = UniPoly::monomial(1, k) * UniPoly::x_pow_minus_one(a) * UniPoly::x_pow_minus_one(b);
  return num.exact_div(UniPoly::x_pow_minus_one(1) * UniPoly::x_pow_minus_one(2));
}

// The homogeneous polynomial of weight w (topological degree 2w) whose
// dehomogenization is u.
GradedPoly lift(const UniPoly& u, int w) { return from_inhomogeneous(u, 2 * w); }

// bbar_i bbar_{i+1} / c1, a polynomial of weight 2i; zero for i < 0.
GradedPoly adjacent_over_c1(int i) {
  if (i < 0) return {};
  return lift(quotient_shape(0, i + 1, i + 2), 2 * i);
}

int K(int i) { return sign_pow(i) * (2 * i + 3) + 1; }

class Suite {
 public:
  explicit Suite(const ChowY& c) : c_(c), R_(c.ring()), m_(c.m()) {
    e_ = GradedPoly::c2() * b_bar(m_ - 2);
    bbe_ = b_bar(m_ - 1) * e_;
  }

  IdentityReport run() {
    report_.n = c_.n();
    bracket_expansions();
    if (c_.n() % 2 == 1) {
      product_collapse();
      key_formula();
      if (m_ % 2 == 0) {
        divided_bracket();
        head_formula();
        bracket_relations();
        even_power_bracket();
      }
    }
    return std::move(report_);
  }

 private:
  void add(std::string name, std::string params, bool passed, bool asserted = true, std::string note = "") {
    report_.checks.push_back({std::move(name), std::move(params), passed, asserted, std::move(note)});
  }

  bool equal_in_ring(const GradedPoly& a, const GradedPoly& b) const { return R_.normal_form(a - b).is_zero(); }

  // [c1^{2i+1} c2^j bbar e]: the monomial minus its binomial-expansion tail.
  GradedPoly bracket(int i, int j) const {
    GradedPoly out = c1_pow(2 * i + 1) * c2_pow(j);
    for (int mu = 1; mu <= i; ++mu)
      out -= c2_pow(j + mu) * c1_pow(2 * i + 1 - 2 * mu) * Rat(expansion_coefficient(2 * i + 3, mu));
    return out * bbe_;
  }

  // <c1^{2i+1} c2^j bbar e> for j = 0, 1: the bracket minus its d-correction.
  GradedPoly angle(int i, int j) const {
    const int shift = 2 * i + 2 + 2 * j;
    const int d_index = m_ / 2 - i - 2 - j;
    return bracket(i, j) - c2_pow(shift) * d_bar(d_index) * e_ * Rat(K(i));
  }

  // Polynomial identities in Z[c1, c2], no relations used.
  void bracket_expansions() {
    const GradedPoly b1 = b_bar(m_ - 1);
    for (int i = 0; m_ - 2 - 2 * i >= 0; ++i) {
      for (int j = 0; j <= 2; ++j) {
        const GradedPoly lhs = -(c2_pow(2 * i + 1 + j) * b_bar(m_ - 2 - 2 * i));
        const GradedPoly rhs = c2_pow(j + 1) * b_bar(2 * i - 1) * b1 - c2_pow(j) * b_bar(2 * i) * e_;
        add("bracket-expansion-odd", ij(i, j), lhs == rhs);
        if (m_ - 3 - 2 * i < 0) continue;
        const GradedPoly lhs2 = -(c2_pow(2 * i + 2 + j) * b_bar(m_ - 3 - 2 * i));
        const GradedPoly rhs2 = c2_pow(j + 1) * b_bar(2 * i) * b1 - c2_pow(j) * b_bar(2 * i + 1) * e_;
        add("bracket-expansion-even", ij(i, j), lhs2 == rhs2);
      }
    }
  }

  // c2^i bbar_{m-1} e = c2^{2i+1} bbar_{m-2-i} bbar_{m-1-i} in R_Q.
  void product_collapse() {
    for (int i = 0; i <= m_ - 2; ++i) {
      const GradedPoly lhs = c2_pow(i) * bbe_;
      const GradedPoly rhs = c2_pow(2 * i + 1) * b_bar(m_ - 2 - i) * b_bar(m_ - 1 - i);
      add("product-collapse", "i=" + std::to_string(i), equal_in_ring(lhs, rhs));
    }
  }

  // [c1^{2i+1} c2^j bbar e] = K I1 + (-1)^i (2i+3) x^{m+j} (x^{i+1}-1)(x^{i+2}-1)/((x-1)(x^2-1)).
  void key_formula() {
    for (int i = 0; 2 * i + 3 <= m_; ++i) {
      for (int j = 0; m_ - 2 * i - j - 3 >= 0; ++j) {
        const int w = 2 * m_ + 2 * i + 2 * j;
        const UniPoly i1 = quotient_shape(2 * i + 2 * j + 3, m_ - j, m_ - 2 * i - j - 3);
        const UniPoly t = quotient_shape(m_ + j, i + 1, i + 2);
        const GradedPoly rhs = lift(i1 * Rat(K(i)) + t * Rat(sign_pow(i) * (2 * i + 3)), w);
        add("key-formula", ij(i, j), equal_in_ring(bracket(i, j), rhs));
      }
    }
  }

  void divisible_in_lattice(const std::string& name, const std::string& params, const GradedPoly& x, int k) {
    const RingElem q = R_.normal_form(x) * frac(1, k);
    add(name, params, c_.coords(q).has_value(), true, "divisor " + std::to_string(k));
  }

  // <c1^{2i+1} c2 bbar e> / (2i+3) = (-1)^i c2^{m+1} bbar_i bbar_{i+1} / c1.
  void divided_bracket() {
    for (int i = 0; i <= m_ / 2 - 2; ++i) {
      const GradedPoly x = angle(i, 1);
      const GradedPoly rhs = c2_pow(m_ + 1) * adjacent_over_c1(i) * Rat(sign_pow(i) * (2 * i + 3));
      add("divided-bracket", "i=" + std::to_string(i), equal_in_ring(x, rhs));
      divisible_in_lattice("divided-bracket-integral", "i=" + std::to_string(i), x, 2 * i + 3);
    }
  }

  // Head generator c1^{m-3-2i} c2^{2i+1} bbar e: I1 vanishes, so the
  // bracket is (m-1-2i) (-1)^{m/2-i} c2^{m+2i+1} bbar_g bbar_{g+1} / c1,
  // g = m/2-i-2. Without the c2 power the two sides differ in degree.
  void head_formula() {
    for (int i = 0; i <= m_ / 2 - 2; ++i) {
      const int ip = m_ / 2 - 2 - i;
      const int k = m_ - 1 - 2 * i;
      const GradedPoly x = bracket(ip, 2 * i + 1);
      const GradedPoly q = adjacent_over_c1(m_ / 2 - i - 2);
      const GradedPoly rhs = c2_pow(m_ + 2 * i + 1) * q * Rat(sign_pow(m_ / 2 - i) * k);
      const std::string p = "i=" + std::to_string(i);
      add("head-formula", p, equal_in_ring(x, rhs));
      divisible_in_lattice("head-formula-integral", p, x, k);
      const GradedPoly literal = q * Rat(sign_pow(i) * k);
      const int dl = x.is_zero() ? -1 : x.degree();
      const int dr = literal.is_zero() ? -1 : literal.degree();
      const bool same = dl == dr && equal_in_ring(x, literal);
      add("head-formula-literal", p, same, false,
          same ? "" : "degree " + std::to_string(dl) + " vs " + std::to_string(dr));
    }
  }

  void bracket_relations() {
    // <c1^{2i+1} bbar e> - K_i / ((-1)^{i-1} (2i+1)) <c1^{2i-1} c2 bbar e> = -c2^m bbar_i bbar_{i+1} / c1
    for (int i = 1; i <= m_ / 2 - 2; ++i) {
      const GradedPoly lhs =
          angle(i, 0) - angle(i - 1, 1) * frac(K(i), sign_pow(i - 1) * (2 * i + 1));
      const GradedPoly rhs = -(c2_pow(m_) * adjacent_over_c1(i));
      add("bracket-relation-top", "i=" + std::to_string(i), equal_in_ring(lhs, rhs));
    }
    // <c1^{2a+1-2b} c2^{1+b} bbar e> - ((-1)^b (2a-2b+3) + (-1)^a)/(2a+3) <c1^{2a+1} c2 bbar e>
    //   = -c2^{m+b+2} bbar_{a-b-1} bbar_{a-b} / c1
    for (int a = 1; a <= m_ / 2 - 2; ++a) {
      for (int b = 1; b <= a; ++b) {
        const int d = a - b;
        const GradedPoly first = bracket(d, 1 + b) - c2_pow(2 * a + 4) * d_bar(m_ / 2 - a - 3) * e_ * Rat(K(d));
        const Rat coeff = frac(sign_pow(b) * (2 * d + 3) + sign_pow(a), 2 * a + 3);
        const GradedPoly lhs = first - angle(a, 1) * coeff;
        const GradedPoly rhs = -(c2_pow(m_ + b + 2) * adjacent_over_c1(d - 1));
        // Reported only: no rational multiple of <c1^{2a+1} c2 bbar e> closes this reading.
        add("bracket-relation-shift", "a=" + std::to_string(a) + " b=" + std::to_string(b), equal_in_ring(lhs, rhs), false);
      }
    }
    // [c1^{m-3-2a-2b} c2^{2a+b+1} bbar e] - ((-1)^b (m-1-2a-2b) + (-1)^{m/2-a})/(m-1-2a) [c1^{m-3-2a} c2^{2a+1} bbar e]
    //   = -c2^{m+2a+b+1} bbar_g bbar_{g+1} / c1, g = m/2-2-a-b.
    // The numerator term m-1-2a-2b is the divisor of the first bracket; the
    // variant with +2b is kept as an unasserted reading.
    for (int a = 0; a <= m_ / 2 - 2; ++a) {
      for (int b = 1; a + b <= m_ / 2 - 2; ++b) {
        const int g = m_ / 2 - 2 - a - b;
        const GradedPoly first = bracket(g, 2 * a + b + 1);
        const GradedPoly head = bracket(m_ / 2 - 2 - a, 2 * a + 1);
        const GradedPoly rhs = -(c2_pow(m_ + 2 * a + b + 1) * adjacent_over_c1(g));
        const std::string p = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        const auto holds = [&](int signed_b) {
          const Rat coeff = frac(sign_pow(b) * (m_ - 1 - 2 * a + signed_b) + sign_pow(m_ / 2 - a), m_ - 1 - 2 * a);
          return equal_in_ring(first - head * coeff, rhs);
        };
        add("bracket-relation-head", p, holds(-2 * b));
        add("bracket-relation-head-plus", p, holds(2 * b), false);
      }
    }
  }

  // <c1^{2i+2} c2^j bbar e> = -c2^{m+j} bbar_i bbar_{i+1}.
  void even_power_bracket() {
    for (int i = 0; 2 * i + 2 <= m_ - 2; ++i) {
      for (int j = 0; 2 * i + 2 + j <= m_ - 2; ++j) {
        GradedPoly lhs = c1_pow(2 * i + 2) * c2_pow(j);
        for (int mu = 1; mu <= i; ++mu)
          lhs -= c2_pow(j + mu) * c1_pow(2 * i + 2 - 2 * mu) * Rat(expansion_coefficient(2 * i + 3, mu));
        lhs -= c2_pow(i + j + 1) * Rat(K(i));
        lhs = lhs * bbe_;
        const GradedPoly rhs = -(c2_pow(m_ + j) * b_bar(i) * b_bar(i + 1));
        add("even-power-bracket", ij(i, j), equal_in_ring(lhs, rhs));
      }
    }
  }

  const ChowY& c_;
  const QuotientRing& R_;
  int m_;
  GradedPoly e_;
  GradedPoly bbe_;
  IdentityReport report_;
};

}  // namespace

bool IdentityReport::ok() const {
  bool any = false;
  for (const auto& c : checks) {
    if (!c.asserted) continue;
    if (!c.passed) return false;
    any = true;
  }
  return any;
}

IdentityReport check_class_identities(int max_k, int max_h, int max_g) {
  IdentityReport r;
  for (int k = 0; k <= max_k; ++k) {
    const std::string p = "k=" + std::to_string(k);
    r.checks.push_back({"b-closed-form", p, b_class(k) == b_class_from_roots(k), true, ""});
    r.checks.push_back({"d-closed-form", p, d_class(k) == d_class_from_roots(k), true, ""});
  }
  for (int h = 0; h <= max_h; ++h)
    r.checks.push_back({"alternating-b-sum", "h=" + std::to_string(h), check_alternating_b_sum(h), true, ""});
  for (int g = 1; g <= max_g; ++g)
    r.checks.push_back({"binomial-expansion", "g=" + std::to_string(g), check_binomial_expansion(g), true, ""});
  return r;
}

IdentityReport check_proof_identities(const ChowY& c) { return Suite(c).run(); }

}  // namespace chowkit
