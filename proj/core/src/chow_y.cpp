#include "chowkit/chow_y.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chowkit/classes.hpp"

namespace chowkit {
namespace {

std::string monomial_label(int a, int b, const std::string& v, const std::string& w) {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const std::string& s) {
    if (any) os << " ";
    os << s;
    any = true;
  };
  if (a == 1) put("c1");
  if (a > 1) put("c1^" + std::to_string(a));
  if (b == 1) put("c2");
  if (b > 1) put("c2^" + std::to_string(b));
  if (!v.empty()) put(v);
  if (!w.empty()) put(w);
  return any ? os.str() : "1";
}

// Parameters of one divided element: xi = c1^a c2^b v w, l, and the
// polynomial correction terms.
struct Divided {
  int formula = 0;
  int param = 0;
  int a = 0;
  int b = 0;
  long l = 1;
};

std::vector<Divided> replacement_set(int n) {
  const int m = n / 2;
  std::vector<Divided> out;
  auto type_a = [&](int formula, int max_i, int c2_power) {
    for (int i = 0; i <= max_i; ++i) out.push_back({formula, i, 2 * i + 1, c2_power, 2 * i + 3});
  };
  auto type_b = [&](int formula, int max_j, int shift) {
    // shift 1: c1^{m-2j-3} c2^{2j+1} / (m-2j-1); shift 0: c1^{m-2j-2} c2^{2j} / (m-2j)
    for (int j = 1; j <= max_j; ++j) out.push_back({formula, j, m - 2 * j - 2 - shift, 2 * j + shift, m - 2 * j - shift});
  };
  switch (chow_case(n)) {
    case ChowCase::even_n_even_m:
      type_a(1, m / 2 - 2, 1);
      type_b(2, m / 2 - 2, 1);
      break;
    case ChowCase::even_n_odd_m:
      type_a(3, (m - 5) / 2, 1);
      type_b(4, (m - 3) / 2, 0);
      break;
    case ChowCase::odd_n_even_m:
      type_a(5, m / 2 - 2, 1);
      type_b(6, m / 2 - 2, 1);
      break;
    case ChowCase::odd_n_odd_m:
      type_a(7, (m - 3) / 2, 0);
      type_b(8, (m - 3) / 2, 0);
      break;
  }
  return out;
}

}  // namespace

ChowCase chow_case(int n) {
  const int m = n / 2;
  if (n % 2 == 0) return m % 2 == 0 ? ChowCase::even_n_even_m : ChowCase::even_n_odd_m;
  return m % 2 == 0 ? ChowCase::odd_n_even_m : ChowCase::odd_n_odd_m;
}

std::string case_name(ChowCase c) {
  switch (c) {
    case ChowCase::even_n_even_m: return "n=2m, m even";
    case ChowCase::even_n_odd_m: return "n=2m, m odd";
    case ChowCase::odd_n_even_m: return "n=2m+1, m even";
    case ChowCase::odd_n_odd_m: return "n=2m+1, m odd";
  }
  return "";
}

// ---------------------------------------------------------------- ChowY

ChowY::ChowY(int n) : ring_(std::make_shared<const QuotientRing>(n)) {
  std::tie(v_, w_) = ring_->v_classes();
  const QuotientRing& R = *ring_;
  const int m = R.m();

  // The divided element <xi> for each replacement.
  std::vector<Divided> repl = replacement_set(n);
  auto bracket = [&](const Divided& d) {
    RingElem out = monomial(d.a, d.b, true, true);
    if (d.formula % 2 == 1) {
      const int i = d.param;
      const Int k_half = Int((sign_pow(i) * (2 * i + 3) + 1) / 2);
      int sign_exp = 0, p = 0, q = 0;
      bool use_v = false;
      switch (d.formula) {
        case 1: sign_exp = (m + 2 * i + 2) / 2; p = 2 * i + 4; q = (m - 2 * i - 6) / 2; use_v = true; break;
        case 3: sign_exp = (m + 2 * i + 1) / 2; p = 2 * i + 3; q = (m - 2 * i - 5) / 2; use_v = false; break;
        case 5: sign_exp = (m + 2 * i + 2) / 2; p = 2 * i + 4; q = (m - 2 * i - 6) / 2; use_v = false; break;
        case 7: sign_exp = (m + 2 * i + 3) / 2; p = 2 * i + 3; q = (m - 2 * i - 5) / 2; use_v = true; break;
        default: break;
      }
      const RingElem head = R.normal_form(GradedPoly::c1c2(0, p) * d_class(q));
      out += R.mul(head, use_v ? v_.elem : w_.elem) * Rat(sign_pow(sign_exp) * k_half);
      for (int mu = 1; mu <= i; ++mu)
        out -= monomial(2 * i + 1 - 2 * mu, d.b + mu, true, true) * Rat(expansion_coefficient(2 * i + 3, mu));
    } else {
      const int g = static_cast<int>(d.l);
      for (int mu = 1; mu <= (g - 3) / 2; ++mu)
        out -= monomial(d.a - 2 * mu, d.b + mu, true, true) * Rat(expansion_coefficient(g, mu));
    }
    return out * frac(1, d.l);
  };

  for (int ev = 0; ev <= 1; ++ev)
    for (int ew = 0; ew <= 1; ++ew)
      for (int i = 0; i <= m - 2; ++i)
        for (int a = 0; a <= m - 2 - i; ++a) {
          BasisElem e;
          e.a = a;
          e.b = i;
          e.ev = ev;
          e.ew = ew;
          e.degree = 2 * a + 4 * i + (ev ? v_.degree : 0) + (ew ? w_.degree : 0);
          e.label = monomial_label(a, i, ev ? v_.name : "", ew ? w_.name : "");
          e.elem = monomial(a, i, ev, ew);
          if (ev && ew) {
            for (const Divided& d : repl) {
              if (d.a != a || d.b != i) continue;
              e.formula = d.formula;
              e.param = d.param;
              e.l = d.l;
              e.elem = bracket(d);
              e.label = "<" + e.label + ">/" + std::to_string(d.l);
            }
          }
          basis_.push_back(std::move(e));
        }
  std::size_t used = 0;
  for (const auto& e : basis_) used += e.divided() ? 1 : 0;
  if (used != repl.size()) throw std::logic_error("ChowY: a divided element does not replace an A_n monomial");

  std::stable_sort(basis_.begin(), basis_.end(), [](const BasisElem& x, const BasisElem& y) { return x.degree < y.degree; });

  std::map<int, std::vector<RatVector>> vectors;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const BasisElem& e = basis_[k];
    if (e.elem.is_zero() || e.elem.degree() != e.degree)
      throw std::logic_error("ChowY: basis element " + e.label + " is zero or has the wrong degree");
    by_degree_[e.degree].push_back(k);
    vectors[e.degree].push_back(e.elem.part(e.degree));
  }
  try {
    lattice_ = GradedLattice(R.dims(), std::move(vectors));
  } catch (const std::invalid_argument& err) {
    throw std::logic_error(std::string("ChowY: candidate basis is not a basis: ") + err.what());
  }
  for (const auto& [deg, dim] : R.dims())
    if (lattice_.rank(deg) != dim)
      throw std::logic_error("ChowY: candidate basis has the wrong rank in degree " + std::to_string(deg));

  const GradedLattice reference = reference_lattice(R);
  for (const auto& e : basis_)
    if (e.divided() && !reference.contains(e.elem.part(e.degree), e.degree))
      throw std::logic_error("ChowY: " + e.label + " is not an integral class");

  an_ = build_An(R);
}

const std::vector<std::size_t>& ChowY::indices(int degree) const {
  static const std::vector<std::size_t> empty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? empty : it->second;
}

std::optional<SparseIntVector> ChowY::coords(const RingElem& x) const {
  SparseIntVector out;
  for (const auto& [deg, v] : x.parts()) {
    auto local = lattice_.coords_in(v, deg);
    if (!local) return std::nullopt;
    const auto& idx = indices(deg);
    for (std::size_t k = 0; k < local->size(); ++k)
      if ((*local)[k] != 0) out.emplace_back(idx[k], (*local)[k]);
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

RingElem ChowY::monomial(int a, int b, bool ev, bool ew) const {
  RingElem x = ring_->normal_form(GradedPoly::c1c2(a, b));
  if (ev) x = ring_->mul(x, v_.elem);
  if (ew) x = ring_->mul(x, w_.elem);
  return x;
}

// ---------------------------------------------------------------- lattices

namespace {

std::map<int, std::vector<RatVector>> an_generators(const QuotientRing& R) {
  const auto [v, w] = R.v_classes();
  std::map<int, std::vector<RatVector>> gens;
  for (int ev = 0; ev <= 1; ++ev)
    for (int ew = 0; ew <= 1; ++ew) {
      RingElem tail = R.one();
      if (ev) tail = R.mul(tail, v.elem);
      if (ew) tail = R.mul(tail, w.elem);
      for (int i = 0; i <= R.m() - 2; ++i)
        for (int a = 0; a <= R.m() - 2 - i; ++a) {
          const RingElem x = R.mul(R.normal_form(GradedPoly::c1c2(a, i)), tail);
          for (const auto& [deg, vec] : x.parts()) gens[deg].push_back(vec);
        }
    }
  return gens;
}

}  // namespace

GradedLattice build_An(const QuotientRing& R) {
  auto gens = an_generators(R);
  std::map<int, std::vector<RatVector>> basis;
  for (auto& [deg, vs] : gens) basis[deg] = std::move(vs);
  return GradedLattice(R.dims(), std::move(basis));
}

GradedLattice reference_lattice(const QuotientRing& R) {
  auto gens = an_generators(R);
  for (const auto& [deg, dim] : R.dims()) {
    for (int e = 0; e <= (R.even() ? 1 : 0); ++e) {
      const int rest = deg - e * R.chi_degree();
      if (rest < 0) continue;
      for (int b = 0; 4 * b <= rest; ++b) {
        const RingElem x = R.monomial_nf({(rest - 4 * b) / 2, b, e});
        if (!x.is_zero()) gens[deg].push_back(x.part(deg));
      }
    }
  }
  return GradedLattice::span(R.dims(), gens);
}

// ---------------------------------------------------------------- closure

ClosureReport verify_closure(const ChowY& c) {
  ClosureReport report;
  const QuotientRing& R = c.ring();
  const auto& basis = c.basis();
  const std::size_t r = basis.size();
  std::vector<const SparseIntVector*> table(r * r, nullptr);
  report.products.reserve(r * r / 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      if (basis[i].degree + basis[j].degree > R.top_degree()) continue;
      ++report.pairs;
      auto coords = c.coords(R.mul(basis[i].elem, basis[j].elem));
      if (!coords) {
        report.failure = basis[i].label + " * " + basis[j].label + " is not an integral combination of the basis";
        return report;
      }
      report.products.push_back({i, j, std::move(*coords)});
    }
  for (const auto& p : report.products) {
    table[p.i * r + p.j] = &p.coords;
    table[p.j * r + p.i] = &p.coords;
  }
  report.closed = true;

  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(c.n()));
  std::uniform_int_distribution<std::size_t> pick(0, r - 1);

  report.commutative = true;
  for (int s = 0; s < 200; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (basis[i].degree + basis[j].degree > R.top_degree()) continue;
    auto swapped = c.coords(R.mul(basis[j].elem, basis[i].elem));
    if (!swapped || *swapped != *table[i * r + j]) report.commutative = false;
  }

  // (e_i e_j) e_k == e_i (e_j e_k) through the integer structure constants.
  auto times = [&](const SparseIntVector& x, std::size_t k) {
    std::map<std::size_t, Int> acc;
    for (const auto& [l, coef] : x) {
      const SparseIntVector* p = table[l * r + k];
      if (!p) continue;
      for (const auto& [t, v] : *p) acc[t] += coef * v;
    }
    SparseIntVector out;
    for (auto& [t, v] : acc)
      if (v != 0) out.emplace_back(t, std::move(v));
    return out;
  };
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (basis[i].degree + basis[j].degree + basis[k].degree > R.top_degree()) return true;
    ++report.triples_checked;
    const SparseIntVector left = times(*table[i * r + j], k);
    const SparseIntVector right = times(*table[j * r + k], i);
    return left == right;
  };
  report.associative = true;
  if (c.n() <= 12) {
    for (std::size_t i = 0; i < r && report.associative; ++i)
      for (std::size_t j = 0; j < r && report.associative; ++j)
        for (std::size_t k = 0; k < r; ++k)
          if (!check_triple(i, j, k)) {
            report.associative = false;
            break;
          }
  } else {
    for (int s = 0; s < 5000 && report.associative; ++s)
      report.associative = check_triple(pick(rng), pick(rng), pick(rng));
  }
  return report;
}

// ---------------------------------------------------------------- index

Int expected_index(int n) {
  if (n < 6) throw std::invalid_argument("expected_index: n must be >= 6");
  const int m = n / 2;
  Int out = 1;
  if (m % 2 == 0) {
    for (int k = 1; k <= m - 3; k += 2) out *= Int(k) * k;
    out *= m - 1;
  } else {
    for (int k = 1; k <= m - 2; k += 2) out *= Int(k) * k;
    if (n % 2 == 1) out *= m;
  }
  return out;
}

IndexReport index_vs_An(const ChowY& c) {
  IndexReport report;
  report.expected = expected_index(c.n());
  report.lattice_index = index_of(c.an_lattice(), c.lattice());
  report.divisor_product = 1;
  for (const auto& e : c.basis()) report.divisor_product *= e.l;
  const GradedLattice reference = reference_lattice(c.ring());
  report.reference_index = index_of(c.an_lattice(), reference);
  report.basis_equals_reference = reference == c.lattice();
  return report;
}

// ---------------------------------------------------------------- mod p

ModPReport mod_p_structure(const ChowY& c, unsigned long p) {
  ModPReport report;
  report.p = p;
  const QuotientRing& R = c.ring();
  const int limit = R.top_degree() + 4;
  for (int deg = 0; deg <= limit; deg += 2) report.basis_dims[deg] = c.lattice().rank(deg);
  if (p == 2) {
    const int m = c.m();
    const auto base = presentation_dims({b_class(m - 1), GradedPoly::c2() * b_class(m - 2)}, limit, 2);
    const int dv = c.v().degree, dw = c.w().degree;
    for (int deg = 0; deg <= limit; deg += 2) {
      std::size_t total = 0;
      for (int shift : {0, dv, dw, dv + dw}) {
        auto it = base.find(deg - shift);
        if (it != base.end()) total += it->second;
      }
      report.presentation_dims[deg] = total;
    }
  } else {
    for (int deg = 0; deg <= limit; deg += 2) report.presentation_dims[deg] = R.dim_mod_p(deg, p);
  }
  report.matches = report.basis_dims == report.presentation_dims;
  return report;
}

}  // namespace chowkit
