#include "chowkit/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chowkit {
namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Inverse of a square rational matrix by Gauss-Jordan; throws if singular.
std::vector<RatVector> rat_inverse(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("rat_inverse: singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rat scale = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= scale;
      inv[c][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Int common_denominator(const std::vector<RatVector>& vs) {
  Int l = 1;
  for (const auto& v : vs)
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
  return l;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVector> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return from_rows(conv);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- normal forms

IntMatrix hnf(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows() && k < h.cols(); ++i) {
    while (true) {
      std::size_t best = h.cols();
      for (std::size_t j = k; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        if (best == h.cols() || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == h.cols()) break;
      h.swap_cols(k, best);
      bool clean = true;
      for (std::size_t j = k + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        h.add_col_multiple(j, k, -trunc_div(h(i, j), h(i, k)));
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) h.negate_col(k);
    for (std::size_t j = 0; j < k; ++j) h.add_col_multiple(j, k, -floor_div(h(i, j), h(i, k)));
    ++k;
  }
  return h;
}

IntMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
  return d;
}

SmithForm snf(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto smallest_in = [&](std::size_t t, bool whole_block) {
    std::pair<std::size_t, std::size_t> best{rows, cols};
    auto consider = [&](std::size_t i, std::size_t j) {
      if (m(i, j) == 0) return;
      if (best.first == rows || abs(m(i, j)) < abs(m(best.first, best.second))) best = {i, j};
    };
    if (whole_block) {
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < rows; ++i) consider(i, t);
      for (std::size_t j = t; j < cols; ++j) consider(t, j);
    }
    return best;
  };
  auto move_to_pivot = [&](std::size_t t, std::pair<std::size_t, std::size_t> at) {
    m.swap_rows(t, at.first);
    left.swap_rows(t, at.first);
    m.swap_cols(t, at.second);
    right.swap_cols(t, at.second);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    auto start = smallest_in(t, true);
    if (start.first == rows) break;
    move_to_pivot(t, start);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Int q = -trunc_div(m(i, t), m(t, t));
        m.add_row_multiple(i, t, q);
        left.add_row_multiple(i, t, q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Int q = -trunc_div(m(t, j), m(t, t));
        m.add_col_multiple(j, t, q);
        right.add_col_multiple(j, t, q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_to_pivot(t, smallest_in(t, false));
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender == rows) break;
      m.add_row_multiple(t, offender, 1);
      left.add_row_multiple(t, offender, 1);
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(m(i, i));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("unimodular_inverse: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<RatVector> m(n, RatVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
  auto inv = rat_inverse(std::move(m));
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (inv[r][c].get_den() != 1) throw std::domain_error("unimodular_inverse: matrix is not unimodular");
      out(r, c) = inv[r][c].get_num();
    }
  return out;
}

std::vector<std::size_t> row_reduce(std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat scale = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= scale;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(std::vector<RatVector> rows, std::size_t cols) { return row_reduce(rows, cols).size(); }

std::size_t rank_mod_p(const std::vector<IntVector>& rows, std::size_t cols, unsigned long p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be >= 2");
  using u64 = unsigned long long;
  std::vector<std::vector<u64>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("rank_mod_p: ragged rows");
    std::vector<u64> r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = mpz_fdiv_ui(row[c].get_mpz_t(), p);
    m.push_back(std::move(r));
  }
  auto inverse = [p](u64 x) {
    // Fermat; p is prime for all callers.
    u64 result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const u64 f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  return r;
}

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  IntMatrix d(cyclic_orders.size(), cyclic_orders.size());
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (cyclic_orders[i] <= 0) throw std::invalid_argument("invariant_factors: orders must be positive");
    d(i, i) = cyclic_orders[i];
  }
  std::vector<Int> out;
  for (const auto& f : snf(d).factors)
    if (f > 1) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------- GradedLattice

GradedLattice::Piece GradedLattice::make_piece(std::vector<RatVector> basis, std::size_t dim) {
  for (const auto& v : basis)
    if (v.size() != dim) throw std::invalid_argument("GradedLattice: vector has the wrong ambient dimension");
  std::vector<RatVector> work = basis;
  auto pivots = row_reduce(work, dim);
  if (pivots.size() != basis.size()) throw std::invalid_argument("GradedLattice: basis vectors are linearly dependent");
  const std::size_t k = basis.size();
  std::vector<RatVector> restricted(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) restricted[i][j] = basis[j][pivots[i]];
  Piece piece;
  piece.pivot_inverse = rat_inverse(std::move(restricted));
  piece.pivots = std::move(pivots);
  piece.basis = std::move(basis);
  return piece;
}

GradedLattice::GradedLattice(std::map<int, std::size_t> ambient_dims, std::map<int, std::vector<RatVector>> basis)
    : ambient_dims_(std::move(ambient_dims)) {
  for (auto& [deg, vectors] : basis) {
    if (vectors.empty()) continue;
    auto it = ambient_dims_.find(deg);
    if (it == ambient_dims_.end()) throw std::invalid_argument("GradedLattice: degree has no ambient space");
    pieces_.emplace(deg, make_piece(std::move(vectors), it->second));
  }
}

GradedLattice GradedLattice::span(std::map<int, std::size_t> ambient_dims,
                                  const std::map<int, std::vector<RatVector>>& generators) {
  std::map<int, std::vector<RatVector>> basis;
  for (const auto& [deg, gens] : generators) {
    if (gens.empty()) continue;
    const std::size_t dim = ambient_dims.at(deg);
    const Int scale = common_denominator(gens);
    IntMatrix cols(dim, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].size() != dim) throw std::invalid_argument("GradedLattice::span: wrong ambient dimension");
      for (std::size_t i = 0; i < dim; ++i) cols(i, j) = Rat(gens[j][i] * scale).get_num();
    }
    const IntMatrix h = hnf(cols);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      RatVector v(dim);
      bool nonzero = false;
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] = frac(h(i, j), scale);
        nonzero = nonzero || h(i, j) != 0;
      }
      if (nonzero) basis[deg].push_back(std::move(v));
    }
  }
  return GradedLattice(std::move(ambient_dims), std::move(basis));
}

GradedLattice GradedLattice::saturation() const {
  std::map<int, std::vector<RatVector>> basis;
  for (const auto& [deg, piece] : pieces_) {
    const std::size_t dim = ambient_dims_.at(deg);
    const Int scale = common_denominator(piece.basis);
    IntMatrix cols(dim, piece.basis.size());
    for (std::size_t j = 0; j < piece.basis.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) cols(i, j) = Rat(piece.basis[j][i] * scale).get_num();
    // cols = left^{-1} D right^{-1}; the first rank columns of left^{-1}
    // span the saturation.
    const SmithForm s = snf(cols);
    const IntMatrix u_inv = unimodular_inverse(s.left);
    for (std::size_t j = 0; j < s.rank; ++j) {
      RatVector v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = u_inv(i, j);
      basis[deg].push_back(std::move(v));
    }
  }
  return GradedLattice(ambient_dims_, std::move(basis));
}

std::size_t GradedLattice::ambient_dim(int deg) const {
  auto it = ambient_dims_.find(deg);
  return it == ambient_dims_.end() ? 0 : it->second;
}

std::vector<int> GradedLattice::degrees() const {
  std::vector<int> out;
  for (const auto& [deg, piece] : pieces_) out.push_back(deg);
  return out;
}

std::size_t GradedLattice::rank(int deg) const {
  auto it = pieces_.find(deg);
  return it == pieces_.end() ? 0 : it->second.basis.size();
}

std::size_t GradedLattice::total_rank() const {
  std::size_t total = 0;
  for (const auto& [deg, piece] : pieces_) total += piece.basis.size();
  return total;
}

const std::vector<RatVector>& GradedLattice::basis(int deg) const {
  static const std::vector<RatVector> empty;
  auto it = pieces_.find(deg);
  return it == pieces_.end() ? empty : it->second.basis;
}

void GradedLattice::check_dim(const RatVector& v, int deg) const {
  if (v.size() != ambient_dim(deg))
    throw std::invalid_argument("GradedLattice: vector dimension does not match degree " + std::to_string(deg));
}

std::optional<RatVector> GradedLattice::rational_coords(const RatVector& v, int deg) const {
  check_dim(v, deg);
  auto it = pieces_.find(deg);
  if (it == pieces_.end()) {
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return RatVector{};
    return std::nullopt;
  }
  const Piece& piece = it->second;
  const std::size_t k = piece.basis.size();
  RatVector x(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& vp = v[piece.pivots[j]];
      if (vp != 0) x[i] += piece.pivot_inverse[i][j] * vp;
    }
  // The pivot coordinates determine x; the rest must agree.
  RatVector check(v.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) check[c] += x[i] * piece.basis[i][c];
  }
  if (check != v) return std::nullopt;
  return x;
}

std::optional<IntVector> GradedLattice::coords_in(const RatVector& v, int deg) const {
  auto x = rational_coords(v, deg);
  if (!x) return std::nullopt;
  IntVector out;
  out.reserve(x->size());
  for (const auto& c : *x) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

bool GradedLattice::contains(const GradedLattice& other) const {
  for (const auto& [deg, piece] : other.pieces_)
    for (const auto& v : piece.basis)
      if (!contains(v, deg)) return false;
  return true;
}

bool operator==(const GradedLattice& a, const GradedLattice& b) {
  for (int deg : a.degrees())
    if (a.rank(deg) != b.rank(deg)) return false;
  for (int deg : b.degrees())
    if (a.rank(deg) != b.rank(deg)) return false;
  return a.contains(b) && b.contains(a);
}

Int index_of(const GradedLattice& sub, const GradedLattice& sup) {
  Int index = 1;
  std::vector<int> degs = sub.degrees();
  for (int d : sup.degrees()) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  for (int deg : degs) {
    const std::size_t k = sub.rank(deg);
    if (k != sup.rank(deg))
      throw std::invalid_argument("index_of: rank mismatch in degree " + std::to_string(deg));
    IntMatrix change(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = sup.coords_in(sub.basis(deg)[j], deg);
      if (!coords) throw std::invalid_argument("index_of: sublattice not contained in degree " + std::to_string(deg));
      for (std::size_t i = 0; i < k; ++i) change(i, j) = (*coords)[i];
    }
    index *= abs(determinant(change));
  }
  return index;
}

// ---------------------------------------------------------------- cokernels

std::size_t AbelianGroupReport::total_free_rank() const {
  std::size_t total = 0;
  for (const auto& g : degrees) total += g.free_rank;
  return total;
}

Int AbelianGroupReport::torsion_order() const {
  Int order = 1;
  for (const auto& g : degrees)
    for (const auto& f : g.torsion) order *= f;
  return order;
}

const DegreeGroup* AbelianGroupReport::find(int degree) const {
  for (const auto& g : degrees)
    if (g.degree == degree) return &g;
  return nullptr;
}

AbelianGroupReport cokernel(const GradedMapFamily& family) {
  for (const auto& [src, map] : family.maps) {
    auto dim_of = [&](int deg) {
      auto it = family.dims.find(deg);
      return it == family.dims.end() ? std::size_t{0} : it->second;
    };
    if (map.cols() != dim_of(src) || map.rows() != dim_of(src + family.step))
      throw std::invalid_argument("cokernel: map from degree " + std::to_string(src) + " has the wrong shape");
  }
  AbelianGroupReport report;
  for (const auto& [deg, dim] : family.dims) {
    DegreeGroup g;
    g.degree = deg;
    auto it = family.maps.find(deg - family.step);
    if (it == family.maps.end()) {
      g.free_rank = dim;
    } else {
      const SmithForm s = snf(it->second);
      g.free_rank = dim - s.rank;
      for (const auto& f : s.factors)
        if (f > 1) g.torsion.push_back(f);
    }
    report.degrees.push_back(std::move(g));
  }
  return report;
}

}  // namespace chowkit
