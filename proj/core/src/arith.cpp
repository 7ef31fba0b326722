#include "chowkit/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chowkit {

Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), Int(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("frac: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int k) {
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative exponent");
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::x_pow_minus_one(int k) { return monomial(1, k) - constant(1); }

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
  UniPoly result = constant(1);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
  std::vector<Rat> rem = coeffs_;
  const int dd = divisor.degree();
  const Rat& lead = divisor.coeffs_.back();
  std::vector<Rat> quot(std::max(0, degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rat q = rem[static_cast<std::size_t>(k)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("UniPoly::exact_div: nonzero remainder");
  return q;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rat mag = abs(c);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Monomial

std::string to_string(const Monomial& mono) {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const char* name, int exp) {
    if (exp == 0) return;
    if (any) os << " ";
    os << name;
    if (exp > 1) os << "^" << exp;
    any = true;
  };
  put("c1", mono.a);
  put("c2", mono.b);
  put("chi", mono.e);
  return any ? os.str() : "1";
}

// ---------------------------------------------------------------- GradedPoly

GradedPoly GradedPoly::constant(const Rat& c) { return monomial(c, {}); }

GradedPoly GradedPoly::monomial(const Rat& c, Monomial mono, int chi_degree) {
  if (mono.a < 0 || mono.b < 0 || mono.e < 0 || mono.e > 1)
    throw std::invalid_argument("GradedPoly::monomial: exponent out of range");
  if (mono.e > 0 && chi_degree <= 0)
    throw std::invalid_argument("GradedPoly::monomial: chi requires a positive chi degree");
  GradedPoly p;
  p.chi_degree_ = chi_degree;
  p.add_term(mono, c);
  return p;
}

GradedPoly GradedPoly::chi(int m) {
  if (m < 3) throw std::invalid_argument("GradedPoly::chi: needs m >= 3");
  return monomial(1, {0, 0, 1}, 2 * m - 4);
}

bool GradedPoly::has_chi() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.e > 0; });
}

Rat GradedPoly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<int> GradedPoly::degrees() const {
  std::vector<int> out;
  for (const auto& [mono, c] : terms_) out.push_back(mono.degree(chi_degree_));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GradedPoly::is_homogeneous() const { return degrees().size() <= 1; }

int GradedPoly::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) throw std::logic_error("GradedPoly::degree: not a nonzero homogeneous polynomial");
  return ds.front();
}

std::map<int, GradedPoly> GradedPoly::homogeneous_parts() const {
  std::map<int, GradedPoly> parts;
  for (const auto& [mono, c] : terms_) {
    auto& part = parts[mono.degree(chi_degree_)];
    part.chi_degree_ = chi_degree_;
    part.add_term(mono, c);
  }
  return parts;
}

void GradedPoly::add_term(const Monomial& mono, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::merge_context(int chi_degree) {
  if (chi_degree == 0 || chi_degree == chi_degree_) return;
  if (chi_degree_ != 0) throw std::invalid_argument("GradedPoly: incompatible chi degrees");
  chi_degree_ = chi_degree;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  merge_context(o.chi_degree_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  merge_context(o.chi_degree_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [mono, v] : r.terms_) v = -v;
  return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out;
  out.chi_degree_ = a.chi_degree_;
  out.merge_context(b.chi_degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.e + mb.e > 1) throw std::domain_error("GradedPoly: chi^2 needs multiply() with its value");
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

GradedPoly multiply(const GradedPoly& p, const GradedPoly& q, const GradedPoly& chi_square) {
  if (chi_square.has_chi()) throw std::invalid_argument("multiply: chi^2 value must be chi-free");
  GradedPoly out;
  out.chi_degree_ = p.chi_degree_;
  out.merge_context(q.chi_degree_);
  GradedPoly folded;
  for (const auto& [ma, ca] : p.terms_) {
    for (const auto& [mb, cb] : q.terms_) {
      Monomial prod = ma * mb;
      if (prod.e == 2) {
        folded.add_term({prod.a, prod.b, 0}, ca * cb);
      } else {
        out.add_term(prod, ca * cb);
      }
    }
  }
  if (!folded.is_zero()) out += folded * chi_square;
  return out;
}

GradedPoly GradedPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
  GradedPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool GradedPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

bool GradedPoly::is_two_local() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return mpz_odd_p(t.second.get_den_mpz_t()) != 0; });
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Printed highest c1 power first within each (e, b) block for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rat mag = abs(c);
    const bool unit_mono = mono == Monomial{};
    if (unit_mono || mag != 1) os << mag.get_str();
    if (!unit_mono) {
      if (mag != 1) os << " ";
      os << chowkit::to_string(mono);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- SymPoly

SymPoly::SymPoly(Terms terms) {
  for (auto& [key, c] : terms) {
    if (key.first < 0 || key.second < 0) throw std::invalid_argument("SymPoly: negative exponent");
    if (c != 0) terms_.emplace(key, c);
  }
  for (const auto& [key, c] : terms_) {
    auto it = terms_.find({key.second, key.first});
    if (it == terms_.end() || it->second != c) throw std::invalid_argument("SymPoly: input is not symmetric");
  }
}

GradedPoly sym_to_c(const SymPoly& p) {
  SymPoly::Terms work = p.terms();
  GradedPoly out;
  while (!work.empty()) {
    // The term with the largest alpha exponent has i >= j by symmetry.
    auto lead = std::max_element(work.begin(), work.end(), [](const auto& x, const auto& y) {
      return x.first.first < y.first.first;
    });
    const int i = lead->first.first;
    const int j = lead->first.second;
    const Int c = lead->second;
    const int a = i - j;
    out += GradedPoly::monomial(Rat(c), {a, j, 0});
    // Subtract c (alpha + beta)^a (alpha beta)^j.
    for (int r = 0; r <= a; ++r) {
      auto key = std::make_pair(j + r, j + a - r);
      Int& slot = work[key];
      slot -= c * binomial(a, r);
      if (slot == 0) work.erase(key);
    }
  }
  return out;
}

UniPoly to_inhomogeneous(const GradedPoly& p, int deg) {
  if (deg < 0 || deg % 2 != 0) throw std::invalid_argument("to_inhomogeneous: degree must be even and nonnegative");
  if (p.has_chi()) throw std::invalid_argument("to_inhomogeneous: chi is not allowed");
  const UniPoly one_plus_x(std::vector<Rat>{1, 1});
  UniPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree(0) != deg) throw std::invalid_argument("to_inhomogeneous: input is not homogeneous of the given degree");
    out += c * (one_plus_x.pow(mono.a) * UniPoly::monomial(1, mono.b));
  }
  return out;
}

GradedPoly from_inhomogeneous(const UniPoly& u, int deg) {
  if (deg < 0 || deg % 2 != 0) throw std::invalid_argument("from_inhomogeneous: degree must be even and nonnegative");
  const int width = deg / 2;
  if (u.degree() > width) throw std::invalid_argument("from_inhomogeneous: polynomial too wide for the degree");
  Int common = 1;
  for (int k = 0; k <= width; ++k) {
    if (u.coeff(k) != u.coeff(width - k)) throw std::invalid_argument("from_inhomogeneous: polynomial is not palindromic");
    const Rat c = u.coeff(k);
    if (c != 0) common = lcm(common, Int(c.get_den()));
  }
  SymPoly::Terms terms;
  for (int k = 0; k <= width; ++k) {
    const Rat scaled = u.coeff(k) * common;
    if (scaled != 0) terms[{width - k, k}] = scaled.get_num();
  }
  return sym_to_c(SymPoly(std::move(terms))) * frac(1, common);
}

}  // namespace chowkit
