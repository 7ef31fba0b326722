#include "chowkit/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chowkit/classes.hpp"

namespace chowkit {

// ---------------------------------------------------------------- RingElem

RingElem RingElem::homogeneous(int degree, RatVector coords) {
  RingElem x;
  x.add_scaled(degree, coords, 1);
  return x;
}

RatVector RingElem::part(int degree) const {
  auto it = parts_.find(degree);
  return it == parts_.end() ? RatVector{} : it->second;
}

int RingElem::degree() const {
  if (parts_.size() != 1) throw std::logic_error("RingElem::degree: not a nonzero homogeneous element");
  return parts_.begin()->first;
}

bool RingElem::has_integer_coords() const {
  for (const auto& [deg, v] : parts_)
    for (const auto& c : v)
      if (c.get_den() != 1) return false;
  return true;
}

bool RingElem::is_two_local() const {
  for (const auto& [deg, v] : parts_)
    for (const auto& c : v)
      if (mpz_even_p(c.get_den_mpz_t())) return false;
  return true;
}

void RingElem::add_scaled(int degree, const RatVector& v, const Rat& c) {
  if (c == 0) return;
  auto it = parts_.find(degree);
  if (it == parts_.end()) {
    RatVector scaled(v.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      scaled[i] = v[i] * c;
      nonzero = nonzero || scaled[i] != 0;
    }
    if (nonzero) parts_.emplace(degree, std::move(scaled));
    return;
  }
  RatVector& dst = it->second;
  if (dst.size() != v.size()) throw std::invalid_argument("RingElem: coordinate length mismatch");
  bool nonzero = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) dst[i] += v[i] * c;
    nonzero = nonzero || dst[i] != 0;
  }
  if (!nonzero) parts_.erase(it);
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [deg, v] : o.parts_) add_scaled(deg, v, 1);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [deg, v] : o.parts_) add_scaled(deg, v, -1);
  return *this;
}

RingElem& RingElem::operator*=(const Rat& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [deg, v] : parts_)
    for (auto& x : v) x *= c;
  return *this;
}

// ---------------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(int n) : n_(n), m_(n / 2) {
  if (n < 6) throw std::invalid_argument("QuotientRing: n must be >= 6");
  top_ = even() ? 8 * m_ - 14 : 8 * m_ - 10;
  for (int deg = 0; deg <= top_; deg += 2) {
    Piece piece = build_piece(deg);
    if (piece.basis.empty())
      throw std::logic_error("QuotientRing: degree " + std::to_string(deg) + " below the top degree vanishes");
    for (std::size_t i = 0; i < piece.basis.size(); ++i) basis_lookup_.emplace(piece.basis[i], std::make_pair(deg, i));
    for (std::size_t i = 0; i < piece.raw.size(); ++i) raw_lookup_.emplace(piece.raw[i], piece.raw_nf[i]);
    pieces_.emplace(deg, std::move(piece));
  }
  // All relations live in degree <= 4m, so two vanishing degrees past the
  // top force every higher degree to vanish.
  for (int deg = top_ + 2; deg <= top_ + 4; deg += 2)
    if (!build_piece(deg).basis.empty())
      throw std::logic_error("QuotientRing: ring does not vanish above degree " + std::to_string(top_));

  if (even()) {
    const GradedPoly sq = chi_square();
    for (int b = 0; 4 * b + 2 * chi_degree() <= top_; ++b)
      for (int a = 0; 2 * a + 4 * b + 2 * chi_degree() <= top_; ++a) {
        const RingElem x = normal_form(GradedPoly::c1c2(a, b) * sq);
        Sparse s;
        for (const auto& [deg, v] : x.parts())
          for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s.emplace_back(i, v[i]);
        chi_square_nf_.emplace(Monomial{a, b, 0}, std::move(s));
      }
  }
}

bool QuotientRing::is_canonical(const Monomial& mono) const {
  const int a = mono.a;
  const int b = mono.b;
  if (even()) {
    if (mono.e == 1) return b == 0 && a < 2 * (m_ - 1);
    if (b == 0) return a < 2 * (m_ - 1);
    // b = 2i - 1 or 2i with 1 <= i <= m - 2
    const int i = (b + 1) / 2;
    return i <= m_ - 2 && a < 2 * (m_ - 1 - i);
  }
  if (mono.e != 0) return false;
  const int i = b / 2;  // b = 2i or 2i + 1
  return i <= m_ - 2 && a < 2 * (m_ - 1 - i);
}

std::vector<Monomial> QuotientRing::raw_monomials(int degree) const {
  std::vector<Monomial> out;
  const int max_e = even() ? 1 : 0;
  for (int e = 0; e <= max_e; ++e) {
    const int rest = degree - e * chi_degree();
    if (rest < 0) continue;
    for (int b = 0; 4 * b <= rest; ++b) out.push_back({(rest - 4 * b) / 2, b, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GradedPoly> QuotientRing::relations() const {
  if (even()) return {GradedPoly::c2() * GradedPoly::chi(m_), d_class(m_ - 1)};
  return {d_class(m_ - 1), GradedPoly::c1c2(0, 2) * d_class(m_ - 2)};
}

GradedPoly QuotientRing::chi_square() const {
  if (!even()) throw std::logic_error("QuotientRing::chi_square: only defined for even n");
  return d_class(m_ - 2);
}

QuotientRing::Piece QuotientRing::build_piece(int degree) const {
  Piece piece;
  piece.raw = raw_monomials(degree);
  const std::size_t ncols = piece.raw.size();
  std::map<Monomial, std::size_t> col_of;
  for (std::size_t i = 0; i < ncols; ++i) col_of[piece.raw[i]] = i;

  const GradedPoly sq = even() ? chi_square() : GradedPoly{};
  for (const GradedPoly& rel : relations()) {
    const int shift = degree - rel.degree();
    if (shift < 0) continue;
    for (const Monomial& mono : raw_monomials(shift)) {
      const GradedPoly prod = multiply(GradedPoly::monomial(1, mono, chi_degree()), rel, sq);
      IntVector row(ncols);
      for (const auto& [term, c] : prod.terms()) row[col_of.at(term)] = c.get_num();
      piece.relation_rows.push_back(std::move(row));
    }
  }

  // Non-canonical columns first, so elimination pivots on them whenever it can.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ncols; ++i)
    if (!is_canonical(piece.raw[i])) order.push_back(i);
  const std::size_t non_basis = order.size();
  for (std::size_t i = 0; i < ncols; ++i)
    if (is_canonical(piece.raw[i])) order.push_back(i);

  std::vector<RatVector> rows;
  for (const auto& r : piece.relation_rows) {
    RatVector v(ncols);
    for (std::size_t k = 0; k < ncols; ++k) v[k] = r[order[k]];
    rows.push_back(std::move(v));
  }
  const auto pivots = row_reduce(rows, ncols);
  if (pivots.size() != non_basis || (non_basis > 0 && pivots.back() != non_basis - 1))
    throw std::logic_error("QuotientRing: canonical monomials are not a basis in degree " + std::to_string(degree));

  std::vector<std::size_t> basis_pos(ncols, ncols);
  for (std::size_t k = non_basis; k < ncols; ++k) {
    basis_pos[order[k]] = piece.basis.size();
    piece.basis.push_back(piece.raw[order[k]]);
  }
  piece.raw_nf.resize(ncols);
  for (std::size_t k = 0; k < non_basis; ++k) {
    // Row k reads raw[order[k]] + sum_j rows[k][j] basis_j = 0.
    Sparse s;
    for (std::size_t j = non_basis; j < ncols; ++j)
      if (rows[k][j] != 0) s.emplace_back(basis_pos[order[j]], -rows[k][j]);
    std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    piece.raw_nf[order[k]] = std::move(s);
  }
  for (std::size_t k = non_basis; k < ncols; ++k) piece.raw_nf[order[k]] = {{basis_pos[order[k]], Rat(1)}};
  return piece;
}

std::size_t QuotientRing::dim(int degree) const {
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? 0 : it->second.basis.size();
}

std::map<int, std::size_t> QuotientRing::dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [deg, piece] : pieces_) out[deg] = piece.basis.size();
  return out;
}

std::size_t QuotientRing::total_rank() const {
  std::size_t total = 0;
  for (const auto& [deg, piece] : pieces_) total += piece.basis.size();
  return total;
}

const std::vector<Monomial>& QuotientRing::basis(int degree) const {
  static const std::vector<Monomial> empty;
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? empty : it->second.basis;
}

int QuotientRing::basis_index(const Monomial& mono) const {
  auto it = basis_lookup_.find(mono);
  return it == basis_lookup_.end() ? -1 : static_cast<int>(it->second.second);
}

const QuotientRing::Sparse& QuotientRing::nf_of(const Monomial& mono) const {
  static const Sparse zero;
  if (mono.e == 2) {
    auto it = chi_square_nf_.find({mono.a, mono.b, 0});
    return it == chi_square_nf_.end() ? zero : it->second;
  }
  auto it = raw_lookup_.find(mono);
  return it == raw_lookup_.end() ? zero : it->second;
}

void QuotientRing::add_nf(std::map<int, RatVector>& acc, const Monomial& mono, const Rat& c) const {
  if (mono.e > 0 && !even()) throw std::invalid_argument("QuotientRing: chi only exists for even n");
  if (mono.e > 2) throw std::invalid_argument("QuotientRing: chi exponent above 2");
  const int deg = mono.degree(chi_degree());
  if (deg > top_) return;
  const Sparse& s = nf_of(mono);
  if (s.empty()) return;
  auto it = acc.find(deg);
  if (it == acc.end()) it = acc.emplace(deg, RatVector(dim(deg))).first;
  for (const auto& [i, v] : s) it->second[i] += c * v;
}

RingElem QuotientRing::monomial_nf(const Monomial& mono) const {
  std::map<int, RatVector> acc;
  add_nf(acc, mono, 1);
  RingElem out;
  for (auto& [deg, v] : acc) out += RingElem::homogeneous(deg, std::move(v));
  return out;
}

RingElem QuotientRing::normal_form(const GradedPoly& p) const {
  if (p.has_chi()) {
    if (!even()) throw std::invalid_argument("QuotientRing::normal_form: chi only exists for even n");
    if (p.chi_degree() != chi_degree()) throw std::invalid_argument("QuotientRing::normal_form: wrong chi degree");
  }
  std::map<int, RatVector> acc;
  for (const auto& [mono, c] : p.terms()) add_nf(acc, mono, c);
  RingElem out;
  for (auto& [deg, v] : acc) out += RingElem::homogeneous(deg, std::move(v));
  return out;
}

RingElem QuotientRing::mul(const RingElem& a, const RingElem& b) const {
  std::map<int, RatVector> acc;
  Rat prod;
  for (const auto& [da, va] : a.parts()) {
    const auto& ba = basis(da);
    for (const auto& [db, vb] : b.parts()) {
      if (da + db > top_) continue;
      const auto& bb = basis(db);
      for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] == 0) continue;
        for (std::size_t j = 0; j < vb.size(); ++j) {
          if (vb[j] == 0) continue;
          prod = va[i] * vb[j];
          add_nf(acc, ba[i] * bb[j], prod);
        }
      }
    }
  }
  RingElem out;
  for (auto& [deg, v] : acc) out += RingElem::homogeneous(deg, std::move(v));
  return out;
}

RingElem QuotientRing::pow(const RingElem& a, int e) const {
  if (e < 0) throw std::invalid_argument("QuotientRing::pow: negative exponent");
  RingElem r = one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

GradedPoly QuotientRing::lift(const RingElem& x) const {
  GradedPoly out;
  for (const auto& [deg, v] : x.parts()) {
    const auto& b = basis(deg);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out += GradedPoly::monomial(v[i], b[i], b[i].e ? chi_degree() : 0);
  }
  return out;
}

std::pair<VClass, VClass> QuotientRing::v_classes() const {
  auto make = [this](int degree, GradedPoly poly) {
    VClass v;
    v.name = "v" + std::to_string(degree);
    v.degree = degree;
    v.elem = normal_form(poly);
    v.poly = std::move(poly);
    return v;
  };
  const Rat half = frac(1, 2);
  if (even()) {
    return {make(2 * m_ - 4, (GradedPoly::chi(m_) - b_class(m_ - 2)) * half),
            make(2 * m_ - 2, b_class(m_ - 1) * half)};
  }
  return {make(2 * m_ - 2, b_class(m_ - 1) * half), make(2 * m_, GradedPoly::c2() * b_class(m_ - 2) * half)};
}

std::size_t QuotientRing::dim_mod_p(int degree, unsigned long p) const {
  if (degree < 0 || degree % 2 != 0) return 0;
  const Piece piece = degree <= top_ ? pieces_.at(degree) : build_piece(degree);
  return piece.raw.size() - rank_mod_p(piece.relation_rows, piece.raw.size(), p);
}

std::string QuotientRing::to_string(const RingElem& x) const { return lift(x).to_string(); }

std::map<int, std::size_t> presentation_dims(const std::vector<GradedPoly>& relations, int max_degree,
                                             unsigned long p) {
  std::map<int, std::size_t> out;
  for (int deg = 0; deg <= max_degree; deg += 2) {
    std::vector<Monomial> cols;
    for (int b = 0; 4 * b <= deg; ++b) cols.push_back({(deg - 4 * b) / 2, b, 0});
    std::vector<IntVector> rows;
    for (const auto& rel : relations) {
      if (rel.has_chi()) throw std::invalid_argument("presentation_dims: relations must be chi-free");
      if (!rel.has_integer_coefficients()) throw std::invalid_argument("presentation_dims: relations must be integral");
      const int shift = deg - rel.degree();
      if (shift < 0) continue;
      for (int b = 0; 4 * b <= shift; ++b) {
        const GradedPoly prod = GradedPoly::c1c2((shift - 4 * b) / 2, b) * rel;
        IntVector row(cols.size());
        for (const auto& [mono, c] : prod.terms()) row[static_cast<std::size_t>(mono.b)] = c.get_num();
        rows.push_back(std::move(row));
      }
    }
    std::size_t r = 0;
    if (p == 0) {
      std::vector<RatVector> q;
      for (const auto& row : rows) q.emplace_back(row.begin(), row.end());
      r = rank(std::move(q), cols.size());
    } else {
      r = rank_mod_p(rows, cols.size(), p);
    }
    out[deg] = cols.size() - r;
  }
  return out;
}

}  // namespace chowkit
