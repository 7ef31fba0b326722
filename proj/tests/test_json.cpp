#include <doctest.h>

#include "chowkit/chow_x.hpp"
#include "chowkit/json_io.hpp"

using namespace chowkit;
using nlohmann::json;

TEST_SUITE("json") {
  TEST_CASE("integers: small as numbers, big as strings") {
    CHECK(int_json(Int(45)) == json(45));
    CHECK(int_json(Int(-3)) == json(-3));
    const Int big("123456789012345678901234567890");
    CHECK(int_json(big) == json("123456789012345678901234567890"));
  }

  TEST_CASE("compute-y document") {
    const ChowY c(8);
    const json j = chow_y_json(c, index_vs_An(c), verify_closure(c));
    CHECK(j.at("n") == 8);
    CHECK(j.at("m") == 4);
    CHECK(j.at("rank") == c.rank());
    CHECK(j.at("basis").size() == c.rank());
    CHECK(j.at("closed") == true);
    for (const char* key : {"case", "top_degree", "v_classes", "index", "products"}) CHECK(j.contains(key));
    int divided = 0;
    for (const auto& e : j.at("basis")) {
      for (const char* key : {"label", "degree", "divided", "l"}) CHECK(e.contains(key));
      divided += e.at("divided").get<bool>();
    }
    CHECK(divided == 1);  // one element <xi>/3 at n = 8
    CHECK(j.at("products")[0].contains("coords"));
    // deterministic serialization
    CHECK(j.dump() == chow_y_json(ChowY(8), index_vs_An(c), verify_closure(c)).dump());
  }

  TEST_CASE("compute-x document") {
    const ChowY c(11);
    const ChowXResult r = analyze_chow_x(c);
    const json j = chow_x_json(c, r.groups, r);
    CHECK(j.at("matches_theorem_4_1") == true);
    CHECK(j.at("diff").empty());
    CHECK(j.at("t") == 2);
    for (const auto& d : j.at("degrees")) {
      for (const char* key : {"deg", "free_rank", "torsion"}) CHECK(d.contains(key));
      if (d.at("deg") == 16) CHECK(d.at("torsion") == json::array({5}));
    }
    const ChowY small(7);
    const json s = chow_x_json(small, compute_chow_x(small), std::nullopt);
    CHECK(s.at("matches_theorem_4_1").is_null());
  }

  TEST_CASE("envelope") {
    const json one = envelope("verify", {json{{"n", 8}}});
    CHECK(one.at("schema") == kSchema);
    CHECK(one.at("command") == "verify");
    CHECK(one.at("n") == 8);
    CHECK(one.at("meta") == meta_json());
    const json many = envelope("verify", {json{{"n", 8}}, json{{"n", 9}}});
    CHECK(many.at("results").size() == 2);
    CHECK(many.at("results")[1].at("n") == 9);
  }

  TEST_CASE("markdown renderers") {
    const ChowY c(11);
    const ChowXResult r = analyze_chow_x(c);
    const std::string md = chow_x_markdown(c, r.groups, r);
    CHECK(md.find("| 16 | Z/5 | 0 | Z/5 |") != std::string::npos);
    const std::string vm = verify_markdown(verify_n(8));
    CHECK(vm.find("PASS") != std::string::npos);
  }
}
