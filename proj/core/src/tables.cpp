#include <functional>
#include <stdexcept>

#include "chowkit/chow_y.hpp"
#include "chowkit/classes.hpp"

namespace chowkit {
namespace {

// Right-hand side of a table entry: coefficient polynomials of 1, v, w, vw.
struct Side {
  GradedPoly one, v, w, vw;
};

GradedPoly term(const Rat& c, int a, int b) {
  if (c == 0) return {};
  if (a < 0 || b < 0) throw std::domain_error("negative exponent c1^" + std::to_string(a) + " c2^" + std::to_string(b));
  return GradedPoly::monomial(c, {a, b, 0});
}

Rat A(int g, int mu) { return Rat(expansion_coefficient(g, mu)); }
Rat C(long n, long k) { return Rat(binomial(n, k)); }

// (-1)^(x/2) for even x.
int sign_half(int x) {
  if (x % 2 != 0) throw std::logic_error("sign_half: odd exponent");
  return sign_pow(x / 2);
}

// d_{x/2} for even x (zero when x < 0).
GradedPoly d_half(int x) {
  if (x % 2 != 0) throw std::logic_error("d_half: odd index");
  return d_class(x / 2);
}

GradedPoly c2_pow(int k) { return GradedPoly::c1c2(0, k); }

// sum_{mu=1}^{upper} (-1)^{1+mu} C(top - mu, mu) c1^{top - 2 mu} c2^{shift + mu}
GradedPoly binomial_tail(int top, int shift, int upper) {
  GradedPoly out;
  for (int mu = 1; mu <= upper; ++mu) out += term(Rat(sign_pow(1 + mu)) * C(top - mu, mu), top - 2 * mu, shift + mu);
  return out;
}

// sum_{mu=lo}^{hi} a_{g,mu} c1^{top - 2 mu} c2^{shift + mu}
GradedPoly a_tail(int g, int top, int shift, int lo, int hi) {
  GradedPoly out;
  for (int mu = lo; mu <= hi; ++mu) out += term(A(g, mu), top - 2 * mu, shift + mu);
  return out;
}

// sum_{mu=-1}^{i-2} (a_{2i-1,mu} + (2i-1)/(2i+1) a_{2i+1,1+mu}) c1^{2i-3-2mu} c2^{shift+mu}
GradedPoly mixed_tail(int i, int shift) {
  GradedPoly out;
  for (int mu = -1; mu <= i - 2; ++mu) {
    const Rat c = A(2 * i - 1, mu) + frac(2 * i - 1, 2 * i + 1) * A(2 * i + 1, 1 + mu);
    out += term(c, 2 * i - 3 - 2 * mu, shift + mu);
  }
  return out;
}

enum class Parity { both, even_m, odd_m };

struct Lhs {
  int a = 0;
  int b = 0;
  bool ev = false;
  bool ew = false;
  bool square = false;  // v^2 or w^2 instead of v or w
};

struct EntrySpec {
  std::string id;
  Parity parity = Parity::both;
  std::string param;  // "", "i" or "k"
  int min_param = 0;
  std::function<Lhs(int m, int p)> lhs;
  std::function<Side(int m, int p)> rhs;
  bool uses_minus_one = false;  // has a sum starting at mu = -1
};

std::vector<EntrySpec> even_table() {
  std::vector<EntrySpec> t;
  t.push_back({"(1)", Parity::both, "", 0, [](int m, int) { return Lhs{m - 1, 0}; },
               [](int m, int) {
                 Side s;
                 s.one = binomial_tail(m - 1, 0, (m - 1) / 2);
                 s.w = GradedPoly::constant(2 * sign_pow(m + 1));
                 return s;
               }});
  t.push_back({"(2)", Parity::both, "k", 1, [](int m, int k) { return Lhs{m - k - 1, k}; },
               [](int m, int k) {
                 Side s;
                 s.one = binomial_tail(m - k - 1, k, (m - k - 1) / 2);
                 s.v = GradedPoly::c2() * b_class(k - 1) * Rat(2 * sign_pow(m + k));
                 s.w = GradedPoly::c2() * b_class(k - 2) * Rat(2 * sign_pow(m + k));
                 return s;
               }});
  t.push_back({"(3)", Parity::both, "", 0, [](int m, int) { return Lhs{m - 1, 0, true}; },
               [](int m, int) {
                 Side s;
                 s.v = binomial_tail(m - 1, 0, (m - 1) / 2);
                 s.vw = GradedPoly::constant(2 * sign_pow(m + 1));
                 return s;
               }});
  t.push_back({"(4)", Parity::both, "i", 1, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = binomial_tail(m - 2 * i - 1, 2 * i, (m - 2 * i - 1) / 2);
                 s.vw = a_tail(2 * i - 1, 2 * i - 2, 1, 0, i - 1) * Rat(2 * sign_pow(m));
                 return s;
               }});
  t.push_back({"(5)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = c2_pow(2 * i + 2) * d_half(m - 2 * i - 4) * (Rat(sign_half(m + 2 * i + 2)) * frac(4 * i, 2 * i + 1)) +
                       a_tail(m - 2 * i - 1, m - 2 * i - 2, 2 * i + 1, 1, (m - 2 * i - 2) / 2);
                 s.vw = mixed_tail(i, 2) * Rat(2);
                 return s;
               },
               true});
  t.push_back({"(6)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = binomial_tail(m - 2 * i - 2, 2 * i + 1, (m - 2 * i - 3) / 2);
                 s.w = c2_pow(2 * i + 1) * d_half(m - 2 * i - 3) * (Rat(sign_half(m + 2 * i + 1)) * frac(2, 2 * i + 1));
                 s.vw = mixed_tail(i, 2) * Rat(-2);
                 return s;
               },
               true});
  t.push_back({"(7)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = c2_pow(2 * i + 2) * d_half(m - 2 * i - 4) * (Rat(sign_half(m + 2 * i)) * frac(2, 2 * i + 1));
                 s.w = binomial_tail(m - 2 * i - 1, 2 * i, (m - 2 * i - 2) / 2);
                 s.vw = mixed_tail(i, 2) * Rat(2);
                 return s;
               },
               true});
  t.push_back({"(8)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.w = c2_pow(2 * i + 1) * d_half(m - 2 * i - 3) * (Rat(sign_half(m + 2 * i + 3)) * frac(4 * i, 2 * i + 1)) +
                       a_tail(m - 2 * i, m - 2 * i - 1, 2 * i, 1, (m - 2 * i - 1) / 2);
                 s.vw = mixed_tail(i, 2) * Rat(-2);
                 return s;
               },
               true});
  t.push_back({"(9)", Parity::both, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.w = binomial_tail(m - 2 * i - 2, 2 * i + 1, (m - 2 * i - 2) / 2);
                 s.vw = a_tail(2 * i + 1, 2 * i, 1, 0, i) * Rat(2 * sign_pow(m));
                 return s;
               }});
  t.push_back({"(10)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true, true}; },
               [](int m, int i) {
                 Side s;
                 for (int mu = 0; mu <= (m - 2 * i - 4) / 2; ++mu) {
                   const Rat c = frac(m - 2 * i + 1, m - 2 * i - 1) * A(m - 2 * i - 1, mu) + A(m - 2 * i + 1, 1 + mu);
                   s.vw += term(c, m - 2 * i - 3 - 2 * mu, 2 * i + 1 + mu);
                 }
                 return s;
               }});
  t.push_back({"(11)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true, true}; },
               [](int m, int i) {
                 Side s;
                 s.vw = a_tail(m - 2 * i, m - 2 * i - 1, 2 * i, 1, (m - 2 * i - 1) / 2);
                 return s;
               }});
  t.push_back({"(12)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true, true}; },
               [](int m, int i) {
                 Side s;
                 s.vw = a_tail(m - 2 * i - 1, m - 2 * i - 2, 2 * i + 1, 1, (m - 2 * i - 2) / 2);
                 return s;
               }});
  t.push_back({"(13)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true, true}; },
               [](int m, int i) {
                 Side s;
                 for (int mu = 0; mu <= (m - 2 * i - 5) / 2; ++mu) {
                   const Rat c = frac(m - 2 * i, m - 2 * i - 2) * A(m - 2 * i - 2, mu) + A(m - 2 * i, 1 + mu);
                   s.vw += term(c, m - 2 * i - 4 - 2 * mu, 2 * i + 2 + mu);
                 }
                 return s;
               }});
  t.push_back({"(14)", Parity::even_m, "", 0, [](int, int) { return Lhs{0, 0, true, false, true}; },
               [](int m, int) {
                 Side s;
                 s.v = d_half(m - 2) * Rat(sign_half(m));
                 return s;
               }});
  t.push_back({"(15)", Parity::odd_m, "", 0, [](int, int) { return Lhs{0, 0, true, false, true}; },
               [](int m, int) {
                 Side s;
                 s.v = -b_class(m - 2);
                 s.w = d_half(m - 3) * Rat(sign_half(m + 3));
                 return s;
               }});
  t.push_back({"(16)", Parity::even_m, "", 0, [](int, int) { return Lhs{0, 0, false, true, true}; },
               [](int m, int) {
                 Side s;
                 s.v = c2_pow(2) * d_half(m - 4) * Rat(sign_half(m + 2));
                 return s;
               }});
  t.push_back({"(17)", Parity::odd_m, "", 0, [](int, int) { return Lhs{0, 0, false, true, true}; },
               [](int m, int) {
                 Side s;
                 s.w = GradedPoly::c2() * d_half(m - 3) * Rat(sign_half(m + 1));
                 return s;
               }});
  return t;
}

std::vector<EntrySpec> odd_table() {
  std::vector<EntrySpec> t;
  t.push_back({"(i)", Parity::both, "", 0, [](int m, int) { return Lhs{m - 1, 0}; },
               [](int m, int) {
                 Side s;
                 s.one = binomial_tail(m - 1, 0, (m - 1) / 2);
                 s.v = GradedPoly::constant(2 * sign_pow(m + 1));
                 return s;
               }});
  t.push_back({"(ii)", Parity::both, "k", 1, [](int m, int k) { return Lhs{m - k - 1, k}; },
               [](int m, int k) {
                 Side s;
                 s.one = binomial_tail(m - k - 1, k, (m - k - 1) / 2);
                 s.v = GradedPoly::c2() * b_class(k - 2) * Rat(2 * sign_pow(m + k));
                 s.w = b_class(k - 1) * Rat(2 * sign_pow(m + k + 1));
                 return s;
               }});
  t.push_back({"(iii)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = binomial_tail(m - 2 * i - 1, 2 * i, (m - 2 * i - 2) / 2);
                 s.w = c2_pow(2 * i) * d_half(m - 2 * i - 2) * (Rat(sign_half(m + 2 * i + 2)) * frac(2, 2 * i - 1));
                 for (int mu = 0; mu <= i - 1; ++mu) {
                   const Rat c = frac(2 * i + 1, 2 * i - 1) * A(2 * i - 1, mu - 1) + A(2 * i + 1, mu);
                   s.vw -= term(c * 2, 2 * i - 1 - 2 * mu, mu);
                 }
                 return s;
               }});
  t.push_back({"(iv)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = c2_pow(2 * i + 1) * d_half(m - 2 * i - 3) * (Rat(sign_half(m + 2 * i + 3)) * frac(4 * i, 2 * i + 1)) +
                       a_tail(m - 2 * i, m - 2 * i - 1, 2 * i, 1, (m - 2 * i - 1) / 2);
                 s.vw = mixed_tail(i, 1) * Rat(2);
                 return s;
               },
               true});
  t.push_back({"(v)", Parity::both, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = binomial_tail(m - 2 * i - 2, 2 * i + 1, (m - 2 * i - 2) / 2);
                 s.vw = a_tail(2 * i + 1, 2 * i, 0, 0, i) * Rat(2 * sign_pow(m + 1));
                 return s;
               }});
  t.push_back({"(vi)", Parity::both, "", 0, [](int m, int) { return Lhs{m - 1, 0, false, true}; },
               [](int m, int) {
                 Side s;
                 s.w = binomial_tail(m - 1, 0, (m - 1) / 2);
                 s.vw = GradedPoly::constant(2 * sign_pow(m + 1));
                 return s;
               }});
  t.push_back({"(vii)", Parity::both, "i", 1, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.w = binomial_tail(m - 2 * i - 1, 2 * i, (m - 2 * i - 1) / 2);
                 s.vw = a_tail(2 * i - 1, 2 * i - 2, 1, 0, i - 1) * Rat(2 * sign_pow(m));
                 return s;
               }});
  t.push_back({"(viii)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.w = c2_pow(2 * i + 2) * d_half(m - 2 * i - 4) * (Rat(sign_half(m + 2 * i + 2)) * frac(4 * i, 2 * i + 1)) +
                       a_tail(m - 2 * i - 1, m - 2 * i - 2, 2 * i + 1, 1, (m - 2 * i - 2) / 2);
                 s.vw = mixed_tail(i, 2) * Rat(2);
                 return s;
               },
               true});
  t.push_back({"(ix)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, false, true}; },
               [](int m, int i) {
                 Side s;
                 s.v = c2_pow(2 * i + 3) * d_half(m - 2 * i - 5) * (Rat(sign_half(m + 2 * i + 3)) * frac(2, 2 * i + 3));
                 s.w = binomial_tail(m - 2 * i - 2, 2 * i + 1, (m - 2 * i - 3) / 2);
                 for (int mu = -1; mu <= i - 1; ++mu) {
                   const Rat c = A(2 * i + 1, mu) - A(2 * i + 1, 1 + mu) + frac(2 * i + 1, 2 * i + 3) * A(2 * i + 3, 1 + mu);
                   s.vw += term(c * 2, 2 * i - 1 - 2 * mu, 1 + mu);
                 }
                 return s;
               },
               true});
  t.push_back({"(x)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true, true}; },
               [](int m, int i) {
                 Side s;
                 for (int mu = 0; mu <= (m - 2 * i - 4) / 2; ++mu) {
                   const Rat c = frac(m - 2 * i + 1, m - 2 * i - 1) * A(m - 2 * i - 1, mu) + A(m - 2 * i + 1, 1 + mu);
                   s.vw += term(c, m - 2 * i - 3 - 2 * mu, 2 * i + 1 + mu);
                 }
                 return s;
               }});
  t.push_back({"(xi)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 1, 2 * i, true, true}; },
               [](int m, int i) {
                 Side s;
                 s.vw = a_tail(m - 2 * i, m - 2 * i - 1, 2 * i, 1, (m - 2 * i - 1) / 2);
                 return s;
               }});
  t.push_back({"(xii)", Parity::even_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true, true}; },
               [](int m, int i) {
                 Side s;
                 s.vw = a_tail(m - 2 * i - 1, m - 2 * i - 2, 2 * i + 1, 1, (m - 2 * i - 2) / 2);
                 return s;
               }});
  t.push_back({"(xiii)", Parity::odd_m, "i", 0, [](int m, int i) { return Lhs{m - 2 * i - 2, 2 * i + 1, true, true}; },
               [](int m, int i) {
                 Side s;
                 for (int mu = 0; mu <= (m - 2 * i - 5) / 2; ++mu) {
                   const Rat c = frac(m - 2 * i, m - 2 * i - 2) * A(m - 2 * i - 2, mu) + A(m - 2 * i, 1 + mu);
                   s.vw += term(c, m - 2 * i - 4 - 2 * mu, 2 * i + 2 + mu);
                 }
                 return s;
               }});
  t.push_back({"(xiv)", Parity::even_m, "", 0, [](int, int) { return Lhs{0, 0, true, false, true}; },
               [](int m, int) {
                 Side s;
                 s.w = d_half(m - 2) * Rat(sign_half(m + 2));
                 return s;
               }});
  t.push_back({"(xv)", Parity::odd_m, "", 0, [](int, int) { return Lhs{0, 0, true, false, true}; },
               [](int m, int) {
                 Side s;
                 s.v = GradedPoly::c2() * d_half(m - 3) * Rat(sign_half(m + 1));
                 return s;
               }});
  t.push_back({"(xvi)", Parity::even_m, "", 0, [](int, int) { return Lhs{0, 0, false, true, true}; },
               [](int m, int) {
                 Side s;
                 s.w = c2_pow(2) * d_half(m - 4) * Rat(sign_half(m));
                 return s;
               }});
  t.push_back({"(xvii)", Parity::odd_m, "", 0, [](int, int) { return Lhs{0, 0, false, true, true}; },
               [](int m, int) {
                 Side s;
                 s.v = c2_pow(3) * d_half(m - 5) * (Rat(sign_half(m + 1)) * frac(1, 3));
                 s.vw = GradedPoly::c1() * frac(-2, 3);
                 return s;
               }});
  return t;
}

std::string lhs_label(const Lhs& l, const ChowY& c) {
  std::string s;
  auto put = [&](const std::string& x) { s += (s.empty() ? "" : " ") + x; };
  if (l.a == 1) put("c1");
  if (l.a > 1) put("c1^" + std::to_string(l.a));
  if (l.b == 1) put("c2");
  if (l.b > 1) put("c2^" + std::to_string(l.b));
  const std::string sq = l.square ? "^2" : "";
  if (l.ev) put(c.v().name + sq);
  if (l.ew) put(c.w().name + sq);
  return s.empty() ? "1" : s;
}

bool side_two_local(const Side& s) {
  return s.one.is_two_local() && s.v.is_two_local() && s.w.is_two_local() && s.vw.is_two_local();
}

bool side_integral(const Side& s) {
  return s.one.has_integer_coefficients() && s.v.has_integer_coefficients() && s.w.has_integer_coefficients() &&
         s.vw.has_integer_coefficients();
}

RingElem evaluate(const ChowY& c, const Side& s) {
  const QuotientRing& R = c.ring();
  const RingElem vw = R.mul(c.v().elem, c.w().elem);
  return R.normal_form(s.one) + R.mul(R.normal_form(s.v), c.v().elem) + R.mul(R.normal_form(s.w), c.w().elem) +
         R.mul(R.normal_form(s.vw), vw);
}

// The literal a_{g,mu} formula at mu = -1 also gives zero, since
// C(g, -2) = 0; the note records that both readings agree.
std::string minus_one_note(const EntrySpec& e, int p) {
  if (!e.uses_minus_one) return "";
  const Int literal = binomial(2 * p - 1, -2);
  return literal == 0 ? "mu=-1 terms vanish under both readings of a_{g,-1}" : "mu=-1 term nonzero under the literal reading";
}

void run_table(const ChowY& c, const std::string& table, const std::vector<EntrySpec>& specs, TableReport& out) {
  const int m = c.m();
  const bool m_even = m % 2 == 0;
  for (const auto& e : specs) {
    if (e.parity == Parity::even_m && !m_even) continue;
    if (e.parity == Parity::odd_m && m_even) continue;
    const int last = e.param.empty() ? e.min_param : 4 * m;
    for (int p = e.min_param; p <= last; ++p) {
      const Lhs l = e.lhs(m, p);
      if (l.a < 0 || l.b < 0) {
        if (e.param.empty()) break;
        continue;
      }
      TableEntry entry;
      entry.table = table;
      entry.id = e.id;
      entry.params = e.param.empty() ? "" : e.param + "=" + std::to_string(p);
      entry.lhs = lhs_label(l, c);
      try {
        const Side s = e.rhs(m, p);
        RingElem lhs = c.monomial(l.a, l.b, l.ev, l.ew);
        if (l.square) lhs = c.ring().mul(lhs, lhs);
        entry.holds = lhs == evaluate(c, s);
        entry.two_local = side_two_local(s);
        entry.integral = side_integral(s);
        entry.note = minus_one_note(e, p);
      } catch (const std::exception& err) {
        entry.note = err.what();
      }
      out.entries.push_back(std::move(entry));
    }
  }
}

// Entry (5) for n = 2m, m even, rewritten in the integral basis:
// the rational (5) coefficients move onto the divided element of formula (1).
void run_rewritten_five(const ChowY& c, TableReport& out) {
  const int m = c.m();
  const QuotientRing& R = c.ring();
  for (int i = 1; m - 2 * i - 2 >= 0; ++i) {
    TableEntry entry;
    entry.table = "even";
    entry.id = "(5)'";
    entry.params = "i=" + std::to_string(i);
    entry.lhs = lhs_label({m - 2 * i - 2, 2 * i + 1, true, false}, c);
    try {
      Side s;
      s.v = c2_pow(2 * i + 2) * d_half(m - 2 * i - 4) * Rat(sign_half(m + 2 * i + 2) * (sign_pow(i) * (2 * i - 1) + 1)) +
            a_tail(m - 2 * i - 1, m - 2 * i - 2, 2 * i + 1, 1, (m - 2 * i - 2) / 2);
      for (int mu = -1; mu <= i - 2; ++mu) s.vw += term(A(2 * i - 1, mu) * 2, 2 * i - 3 - 2 * mu, 2 + mu);
      const BasisElem* divided = nullptr;
      for (const auto& e : c.basis())
        if (e.formula == 1 && e.param == i - 1) divided = &e;
      if (!divided) throw std::logic_error("no divided element for formula (1) at i=" + std::to_string(i - 1));
      // <xi> = l * (<xi>/l); its coefficient times l is the integer 4i - 2.
      const Rat coeff = frac(4 * i - 2, 2 * i + 1);
      const RingElem bracket = divided->elem * Rat(divided->l);
      const RingElem rhs = evaluate(c, s) - bracket * coeff;
      entry.holds = c.monomial(m - 2 * i - 2, 2 * i + 1, true, false) == rhs;
      const Rat on_basis = coeff * Rat(divided->l);
      entry.two_local = side_two_local(s) && mpz_odd_p(coeff.get_den_mpz_t());
      entry.integral = side_integral(s) && on_basis.get_den() == 1;
      entry.note = "coefficient on " + divided->label + " is " + on_basis.get_str();
      (void)R;
    } catch (const std::exception& err) {
      entry.note = err.what();
    }
    out.entries.push_back(std::move(entry));
  }
}

}  // namespace

bool TableReport::all_hold() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (!e.holds || !e.two_local) return false;
  return true;
}

TableReport verify_tables(const ChowY& c) {
  TableReport report;
  if (c.n() % 2 == 0) {
    run_table(c, "even", even_table(), report);
    if (c.m() % 2 == 0) run_rewritten_five(c, report);
  } else {
    run_table(c, "odd", odd_table(), report);
  }
  return report;
}

}  // namespace chowkit
