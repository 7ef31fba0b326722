#include "chowkit/json_io.hpp"

#include <sstream>

namespace chowkit {
namespace {

using nlohmann::json;

json torsion_json(const std::vector<Int>& t) {
  json out = json::array();
  for (const auto& v : t) out.push_back(int_json(v));
  return out;
}

json groups_json(const AbelianGroupReport& g) {
  json out = json::array();
  for (const auto& d : g.degrees)
    out.push_back({{"deg", d.degree}, {"free_rank", d.free_rank}, {"torsion", torsion_json(d.torsion)}});
  return out;
}

std::string torsion_text(const std::vector<Int>& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& v : t) s += (s.empty() ? "" : " + ") + std::string("Z/") + v.get_str();
  return s;
}

std::string group_text(const DegreeGroup& d) {
  std::string s;
  if (d.free_rank) s = "Z^" + std::to_string(d.free_rank);
  if (!d.torsion.empty()) s += (s.empty() ? "" : " + ") + torsion_text(d.torsion);
  return s.empty() ? "0" : s;
}

std::string order_text(const Int& o) { return o == 0 ? "free" : "Z/" + o.get_str(); }

const char* mark(bool ok) { return ok ? "yes" : "NO"; }

}  // namespace

json meta_json() { return {{"tool", "chowkit"}, {"version", "1.0.0"}}; }

json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json chow_y_json(const ChowY& c, const IndexReport& index, const ClosureReport& closure) {
  const QuotientRing& R = c.ring();
  json basis = json::array();
  for (std::size_t k = 0; k < c.basis().size(); ++k) {
    const BasisElem& e = c.basis()[k];
    json item = {{"index", k},
                 {"label", e.label},
                 {"degree", e.degree},
                 {"monomial", {{"c1", e.a}, {"c2", e.b}, {"v", e.ev ? 1 : 0}, {"w", e.ew ? 1 : 0}}},
                 {"divided", e.divided()},
                 {"l", int_json(e.l)},
                 {"value", R.to_string(e.elem)}};
    if (e.divided()) item["replacement"] = {{"formula", e.formula}, {"param", e.param}};
    basis.push_back(std::move(item));
  }
  json products = json::array();
  for (const auto& p : closure.products) {
    json coords = json::array();
    for (const auto& [idx, v] : p.coords) coords.push_back({idx, int_json(v)});
    products.push_back({{"i", p.i}, {"j", p.j}, {"coords", std::move(coords)}});
  }
  return {{"n", c.n()},
          {"m", c.m()},
          {"case", case_name(c.chow_case())},
          {"rank", c.rank()},
          {"top_degree", R.top_degree()},
          {"v_classes", json::array({{{"name", c.v().name}, {"degree", c.v().degree}, {"poly", c.v().poly.to_string()}},
                                     {{"name", c.w().name}, {"degree", c.w().degree}, {"poly", c.w().poly.to_string()}}})},
          {"index", {{"value", int_json(index.lattice_index)}, {"expected", int_json(index.expected)}, {"ok", index.ok()}}},
          {"basis", std::move(basis)},
          {"closed", closure.closed},
          {"products", std::move(products)}};
}

json chow_x_json(const ChowY& c, const AbelianGroupReport& groups, const std::optional<ChowXResult>& result) {
  json out = {{"n", c.n()}, {"case", case_name(c.chow_case())}, {"degrees", groups_json(groups)}};
  out["t"] = c.n() / 4;
  out["residue"] = residue_name(c.n() % 4);
  if (result) {
    out["matches_theorem_4_1"] = result->matches();
    out["diff"] = result->diff;
    json gens = json::array();
    for (const auto& a : result->annotations)
      gens.push_back({{"name", a.generator.name},
                      {"degree", a.generator.degree},
                      {"expected_order", int_json(a.generator.order)},
                      {"actual_order", int_json(a.actual_order)}});
    out["generators"] = std::move(gens);
  } else {
    out["matches_theorem_4_1"] = nullptr;
    out["diff"] = json::array();
  }
  return out;
}

json verify_json(const VerifyResult& r) {
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  json out = {{"n", r.n}, {"passed", r.passed()}, {"checks", std::move(checks)}};
  if (!r.error.empty()) {
    out["error"] = r.error;
    return out;
  }
  out["index"] = {{"lattice", int_json(r.index.lattice_index)},
                  {"divisor_product", int_json(r.index.divisor_product)},
                  {"reference", int_json(r.index.reference_index)},
                  {"expected", int_json(r.index.expected)}};
  json entries = json::array();
  for (const auto& e : r.tables.entries)
    entries.push_back({{"table", e.table},
                       {"id", e.id},
                       {"params", e.params},
                       {"lhs", e.lhs},
                       {"holds", e.holds},
                       {"two_local", e.two_local},
                       {"integral", e.integral},
                       {"note", e.note}});
  out["tables"] = std::move(entries);
  json modp = json::object();
  for (const auto& m : r.mod_p) {
    json dims = json::array();
    for (const auto& [deg, d] : m.basis_dims) {
      auto it = m.presentation_dims.find(deg);
      dims.push_back({deg, d, it == m.presentation_dims.end() ? 0 : it->second});
    }
    modp[std::to_string(m.p)] = {{"matches", m.matches}, {"dims", std::move(dims)}};
  }
  out["mod_p"] = std::move(modp);
  out["chow_x"] = r.chow ? chow_x_json(*r.chow, r.chow_x_groups, r.chow_x) : json();
  return out;
}

json identities_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"params", c.params}, {"passed", c.passed}, {"asserted", c.asserted}, {"note", c.note}});
  return {{"n", r.n}, {"passed", r.ok()}, {"checks", std::move(checks)}};
}

json envelope(const std::string& command, std::vector<json> results) {
  json out;
  if (results.size() == 1) {
    out = std::move(results.front());
  } else {
    out["results"] = std::move(results);
  }
  out["command"] = command;
  out["schema"] = kSchema;
  out["meta"] = meta_json();
  return out;
}

std::string chow_y_markdown(const ChowY& c, const IndexReport& index) {
  std::ostringstream os;
  os << "## CH(Y_" << c.n() << ")  (" << case_name(c.chow_case()) << ")\n\n";
  os << "rank " << c.rank() << ", index over A_n " << index.lattice_index << " (expected " << index.expected << ")\n\n";
  os << "v-classes: " << c.v().name << " = " << c.v().poly.to_string() << ", " << c.w().name << " = "
     << c.w().poly.to_string() << "\n\n";
  os << "| basis element | degree | divisor | normal form in R_Q |\n|---|---|---|---|\n";
  for (const auto& e : c.basis())
    os << "| " << e.label << " | " << e.degree << " | " << e.l << " | " << c.ring().to_string(e.elem) << " |\n";
  return os.str();
}

std::string chow_x_markdown(const ChowY& c, const AbelianGroupReport& groups, const std::optional<ChowXResult>& result) {
  std::ostringstream os;
  os << "## CH(X_" << c.n() << ")  (n = " << residue_name(c.n() % 4) << ", t = " << c.n() / 4 << ")\n\n";
  os << "| degree | group | free rank | torsion |\n|---|---|---|---|\n";
  for (const auto& d : groups.degrees) {
    if (d.free_rank == 0 && d.torsion.empty()) continue;
    os << "| " << d.degree << " | " << group_text(d) << " | " << d.free_rank << " | " << torsion_text(d.torsion) << " |\n";
  }
  if (result) {
    os << "\nExpected structure " << (result->matches() ? "matches" : "DOES NOT match") << ".\n";
    for (const auto& line : result->diff) os << "- " << line << "\n";
    os << "\n| generator | degree | expected | computed |\n|---|---|---|---|\n";
    for (const auto& a : result->annotations)
      os << "| " << a.generator.name << " | " << a.generator.degree << " | " << order_text(a.generator.order) << " | "
         << order_text(a.actual_order) << " |\n";
  }
  return os.str();
}

std::string verify_markdown(const VerifyResult& r) {
  std::ostringstream os;
  os << "## verify n = " << r.n << ": " << (r.passed() ? "PASS" : "FAIL") << "\n\n";
  if (!r.error.empty()) os << "error: " << r.error << "\n\n";
  os << "| check | passed | detail |\n|---|---|---|\n";
  for (const auto& c : r.checks) os << "| " << c.name << " | " << mark(c.passed) << " | " << c.detail << " |\n";
  if (!r.tables.entries.empty()) {
    os << "\n| entry | params | monomial | reduction holds | 2-local | integral |\n|---|---|---|---|---|---|\n";
    for (const auto& e : r.tables.entries)
      os << "| " << e.id << " | " << e.params << " | " << e.lhs << " | " << mark(e.holds) << " | " << mark(e.two_local)
         << " | " << mark(e.integral) << " |\n";
  }
  return os.str();
}

std::string identities_markdown(const IdentityReport& r) {
  std::ostringstream os;
  os << "## identities" << (r.n ? " n = " + std::to_string(r.n) : std::string(" (classes)")) << ": "
     << (r.ok() ? "PASS" : "FAIL") << "\n\n| identity | params | passed | asserted | note |\n|---|---|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << c.name << " | " << c.params << " | " << mark(c.passed) << " | " << (c.asserted ? "yes" : "no") << " | "
       << c.note << " |\n";
  return os.str();
}

}  // namespace chowkit
