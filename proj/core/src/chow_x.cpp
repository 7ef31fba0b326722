#include "chowkit/chow_x.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chowkit {

GradedMapFamily c1_matrix_family(const ChowY& c) {
  const QuotientRing& R = c.ring();
  GradedMapFamily family;
  family.step = 2;
  family.dims = R.dims();
  const RingElem c1 = R.c1();
  for (const auto& [deg, dim] : family.dims) {
    const std::size_t target_dim = R.dim(deg + 2);
    if (target_dim == 0) continue;
    const auto& target = c.indices(deg + 2);
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < target.size(); ++k) local[target[k]] = k;
    IntMatrix mat(target_dim, dim);
    const auto& src = c.indices(deg);
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto coords = c.coords(R.mul(c1, c.basis()[src[col]].elem));
      if (!coords) throw std::logic_error("c1_matrix_family: c1 * " + c.basis()[src[col]].label + " is not integral");
      for (const auto& [idx, v] : *coords) mat(local.at(idx), col) = v;
    }
    family.maps.emplace(deg, std::move(mat));
  }
  return family;
}

AbelianGroupReport compute_chow_x(const ChowY& c) { return cokernel(c1_matrix_family(c)); }

std::string residue_name(int residue) {
  static const char* names[] = {"4t", "4t+1", "4t+2", "4t+3"};
  if (residue < 0 || residue > 3) throw std::invalid_argument("residue_name: residue must be 0..3");
  return names[residue];
}

ChowXExpectation expected_chow_x(int n) {
  if (n < 8) throw std::invalid_argument("expected_chow_x: needs n >= 8 so that every listed generator exists");
  ChowXExpectation e;
  e.n = n;
  e.t = n / 4;
  e.residue = n % 4;
  const int t = e.t;
  const int m = n / 2;
  // Degrees of the lower and upper v-class.
  const int dv = n % 2 == 0 ? 2 * m - 4 : 2 * m - 2;
  const int dw = dv + 2;
  auto add = [&](int k, bool ev, bool ew, long order) {
    ExpectedGenerator g;
    g.k = k;
    g.ev = ev;
    g.ew = ew;
    g.order = order;
    g.degree = 4 * k + (ev ? dv : 0) + (ew ? dw : 0);
    std::string name;
    if (k == 1) name = "c2";
    if (k > 1) name = "c2^" + std::to_string(k);
    auto put = [&](int d) {
      if (!name.empty()) name += " ";
      name += "v" + std::to_string(d);
    };
    if (ev) put(dv);
    if (ew) put(dw);
    g.name = name.empty() ? "1" : name;
    e.generators.push_back(std::move(g));
  };
  switch (e.residue) {
    case 0:
      for (int k = 0; k < t; ++k) {
        add(k, false, false, 0);
        add(k, true, false, 0);
        add(k, false, true, 2);
        add(k, true, true, 2);
      }
      break;
    case 1:
      for (int k = 0; k < t; ++k) add(k, false, false, 0);
      for (int k = 0; k < t - 1; ++k) add(k, false, true, 0);
      for (int k = 0; k < t; ++k) {
        add(k, true, false, 2);
        add(k, true, true, 2);
      }
      add(t - 1, false, true, 2 * t);
      break;
    case 2:
      for (int k = 0; k < t; ++k) {
        add(k, false, false, 0);
        add(k, false, true, 0);
      }
      add(0, true, false, 0);
      for (int k = 0; k < t - 1; ++k) {
        add(k + 1, true, false, 2);
        add(k + 1, true, true, 2);
      }
      add(0, true, true, 4);
      break;
    case 3:
      for (int k = 0; k < t; ++k) {
        add(k, false, false, 0);
        add(k, true, false, 0);
        add(k, false, true, 2);
        add(k, true, true, 2);
      }
      add(t, true, false, 2 * t + 1);
      break;
  }
  return e;
}

AbelianGroupReport ChowXExpectation::report(int top_degree) const {
  std::map<int, DegreeGroup> groups;
  std::map<int, std::vector<Int>> orders;
  for (int deg = 0; deg <= top_degree; deg += 2) groups[deg].degree = deg;
  for (const auto& g : generators) {
    auto& grp = groups[g.degree];
    grp.degree = g.degree;
    if (g.order == 0) {
      ++grp.free_rank;
    } else {
      orders[g.degree].push_back(g.order);
    }
  }
  for (auto& [deg, os] : orders) groups[deg].torsion = invariant_factors(os);
  AbelianGroupReport out;
  for (auto& [deg, grp] : groups) out.degrees.push_back(std::move(grp));
  return out;
}

std::vector<std::string> match_reports(const AbelianGroupReport& actual, const AbelianGroupReport& expected) {
  auto list = [](const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
  };
  std::map<int, std::pair<DegreeGroup, DegreeGroup>> both;
  for (const auto& g : actual.degrees) both[g.degree].first = g;
  for (const auto& g : expected.degrees) both[g.degree].second = g;
  std::vector<std::string> diff;
  for (const auto& [deg, pair] : both) {
    const auto& [a, e] = pair;
    if (a.free_rank != e.free_rank)
      diff.push_back("degree " + std::to_string(deg) + ": free rank " + std::to_string(a.free_rank) + ", expected " +
                     std::to_string(e.free_rank));
    if (a.torsion != e.torsion)
      diff.push_back("degree " + std::to_string(deg) + ": torsion " + list(a.torsion) + ", expected " + list(e.torsion));
  }
  return diff;
}

std::vector<GeneratorAnnotation> annotate_generators(const ChowY& c, const ChowXExpectation& e) {
  const GradedMapFamily family = c1_matrix_family(c);
  std::map<int, SmithForm> smith;
  std::vector<GeneratorAnnotation> out;
  for (const auto& g : e.generators) {
    GeneratorAnnotation ann;
    ann.generator = g;
    const auto coords = c.coords(c.monomial(0, g.k, g.ev, g.ew));
    if (!coords) throw std::logic_error("annotate_generators: " + g.name + " is not integral");
    const auto& idx = c.indices(g.degree);
    IntVector x(idx.size());
    for (const auto& [global, v] : *coords) {
      auto pos = std::find(idx.begin(), idx.end(), global);
      if (pos == idx.end()) throw std::logic_error("annotate_generators: " + g.name + " is not homogeneous");
      x[static_cast<std::size_t>(pos - idx.begin())] = v;
    }
    auto map_it = family.maps.find(g.degree - 2);
    if (map_it == family.maps.end()) {
      // Nothing maps in: the cokernel is the free group itself.
      const bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
      ann.actual_order = zero ? 1 : 0;
    } else {
      auto it = smith.find(g.degree);
      if (it == smith.end()) it = smith.emplace(g.degree, snf(map_it->second)).first;
      const SmithForm& s = it->second;
      // In the basis given by the rows of `left`, the cokernel is
      // sum Z/d_i plus a free part; the image of x has coordinates left * x.
      Int order = 1;
      bool infinite = false;
      for (std::size_t r = 0; r < s.left.rows(); ++r) {
        Int y = 0;
        for (std::size_t k = 0; k < x.size(); ++k) y += s.left(r, k) * x[k];
        if (r >= s.rank) {
          if (y != 0) infinite = true;
          continue;
        }
        const Int& d = s.factors[r];
        Int g_;
        mpz_gcd(g_.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t());
        order = lcm(order, Int(d / g_));
      }
      ann.actual_order = infinite ? Int(0) : order;
    }
    out.push_back(std::move(ann));
  }
  return out;
}

ChowXResult analyze_chow_x(const ChowY& c) {
  ChowXResult r;
  r.n = c.n();
  r.groups = compute_chow_x(c);
  if (c.n() >= 8) {
    r.expectation = expected_chow_x(c.n());
    r.diff = match_reports(r.groups, r.expectation.report(c.ring().top_degree()));
    r.annotations = annotate_generators(c, r.expectation);
  }
  return r;
}

}  // namespace chowkit
