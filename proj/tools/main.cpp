// chowkit command-line front end.
//
// Exit codes: 0 all checks passed, 1 a check failed (or a computation threw),
// 2 invalid invocation.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowkit/json_io.hpp"

namespace {

using namespace chowkit;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string command;
  int n = -1;  // -1: not given
  std::string n_range;
  std::vector<unsigned long> primes{2, 3, 5, 7};
  std::string format = "json";
  std::string output;
  bool fail_fast = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n() {
  if (const char* env = std::getenv("CHOWKIT_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 6) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CHOWKIT_MAX_N must be an integer >= 6");
  }
  return 64;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> resolve_ns(const Config& cfg) {
  const int ceiling = max_n();
  int lo = 0;
  int hi = 0;
  if (cfg.n != -1 && !cfg.n_range.empty()) throw UsageError("give either --n or --n-range, not both");
  if (cfg.n != -1) {
    lo = hi = cfg.n;
  } else if (!cfg.n_range.empty()) {
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::smatch mt;
    if (!std::regex_match(cfg.n_range, mt, range)) throw UsageError("--n-range must look like A..B");
    lo = std::stoi(mt[1]);
    hi = std::stoi(mt[2]);
    if (lo > hi) throw UsageError("--n-range is empty");
  } else {
    throw UsageError("one of --n or --n-range is required");
  }
  if (lo < 6 || hi > ceiling)
    throw UsageError("n must lie in 6.." + std::to_string(ceiling) + " (ceiling set by CHOWKIT_MAX_N)");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

struct Item {
  json data;
  std::string markdown;
  bool passed = true;
  std::string failure;
};

Item run_one(const Config& cfg, int n) {
  Item item;
  try {
    if (cfg.command == "compute-y") {
      const ChowY c(n);
      const IndexReport index = index_vs_An(c);
      const ClosureReport closure = verify_closure(c);
      item.data = chow_y_json(c, index, closure);
      item.markdown = chow_y_markdown(c, index);
      item.passed = closure.closed;
      if (!item.passed) item.failure = "n=" + std::to_string(n) + ": closure: " + closure.failure;
    } else if (cfg.command == "compute-x") {
      const ChowY c(n);
      std::optional<ChowXResult> result;
      AbelianGroupReport groups;
      if (n >= 8) {
        result = analyze_chow_x(c);
        groups = result->groups;
      } else {
        groups = compute_chow_x(c);
      }
      item.data = chow_x_json(c, groups, result);
      item.markdown = chow_x_markdown(c, groups, result);
      item.passed = !result || result->matches();
      if (!item.passed) item.failure = "n=" + std::to_string(n) + ": " + result->diff.front();
    } else if (cfg.command == "verify") {
      const VerifyResult r = verify_n(n, cfg.primes);
      item.data = verify_json(r);
      item.markdown = verify_markdown(r);
      item.passed = r.passed();
      if (!r.error.empty()) item.failure = "n=" + std::to_string(n) + ": " + r.error;
      for (const auto& c : r.checks)
        if (!c.passed && item.failure.empty()) item.failure = "n=" + std::to_string(n) + ": " + c.name + " " + c.detail;
    } else {
      const ChowY c(n);
      const IdentityReport r = check_proof_identities(c);
      item.data = identities_json(r);
      item.markdown = identities_markdown(r);
      item.passed = r.ok();
      for (const auto& ch : r.checks)
        if (ch.asserted && !ch.passed && item.failure.empty())
          item.failure = "n=" + std::to_string(n) + ": " + ch.name + " " + ch.params;
    }
  } catch (const std::exception& e) {
    item.passed = false;
    item.failure = "n=" + std::to_string(n) + ": " + e.what();
    item.data = {{"n", n}, {"error", e.what()}};
    item.markdown = "## n = " + std::to_string(n) + "\n\nerror: " + std::string(e.what()) + "\n";
  }
  return item;
}

int run(const Config& cfg) {
  const std::vector<int> ns = resolve_ns(cfg);
  for (unsigned long p : cfg.primes)
    if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");

  std::vector<Item> items;
  if (cfg.fail_fast) {
    for (int n : ns) {
      items.push_back(run_one(cfg, n));
      if (!items.back().passed) break;
    }
  } else {
    std::vector<std::future<Item>> jobs;
    for (int n : ns) jobs.push_back(std::async(std::launch::async, run_one, std::cref(cfg), n));
    for (auto& j : jobs) items.push_back(j.get());
  }

  // The identities command also checks the n-independent class identities.
  std::optional<IdentityReport> classes;
  if (cfg.command == "identities") classes = check_class_identities();

  std::string text;
  if (cfg.format == "json") {
    std::vector<json> results;
    for (auto& it : items) results.push_back(std::move(it.data));
    json out = envelope(cfg.command, std::move(results));
    if (classes) out["class_identities"] = identities_json(*classes);
    text = out.dump(2) + "\n";
  } else {
    if (classes) text += identities_markdown(*classes) + "\n";
    for (const auto& it : items) text += it.markdown + "\n";
  }

  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw UsageError("cannot open " + cfg.output);
    f << text;
  }

  bool ok = !classes || classes->ok();
  if (classes && !classes->ok()) std::cerr << "FAIL class identities\n";
  for (const auto& it : items) {
    if (it.passed) continue;
    ok = false;
    std::cerr << "FAIL " << it.failure << "\n";
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integral Chow rings of Y_n and X_n"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "single n (>= 6)");
    sub->add_option("--n-range", cfg.n_range, "inclusive range A..B");
    sub->add_option("--format", cfg.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->add_flag("--fail-fast", cfg.fail_fast, "stop at the first failing n (runs sequentially)");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  };
  add_common(app.add_subcommand("compute-y", "integral basis, index and product table of CH(Y_n)"));
  add_common(app.add_subcommand("compute-x", "CH(X_n) as the cokernel of c1, with the expected structure"));
  auto* verify = app.add_subcommand("verify", "index, closure, tables, mod-p dimensions and CH(X_n)");
  add_common(verify);
  verify->add_option("--primes", cfg.primes, "primes for the mod-p check")->delimiter(',');
  add_common(app.add_subcommand("identities", "class identities and the bracket identity suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
