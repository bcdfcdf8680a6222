// Command-line front end: enumerate, table, exists, cache.
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "howe/enumerate.hpp"
#include "howe/io.hpp"

using nlohmann::json;
using namespace howe;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kInvariant = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t pmin = 0, pmax = 0;
  std::string strategy = "b";
  std::uint64_t seed = 0x5eed;
  std::string cache_dir;
  std::string format = "text";
  unsigned workers = 1;
  bool verify = false;
  bool refresh = false;
};

void check_prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (p <= 3) throw UsageError("p must be greater than 3");
  if (p >= (1u << 20)) throw UsageError("p must be below 2^20");
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 5); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

SuperspecialList genus2_list(const FieldCtx& F, const RunConfig& cfg, bool* from_cache = nullptr) {
  if (from_cache) *from_cache = false;
  ClosureOptions opts;
  opts.workers = cfg.workers;
  if (cfg.cache_dir.empty()) return superspecial_genus2_list(F, opts);
  const auto file = cache_file(cfg.cache_dir, F.p());
  if (!cfg.refresh && std::filesystem::exists(file)) {
    if (from_cache) *from_cache = true;
    return load_cache(file, F);
  }
  SuperspecialList L = superspecial_genus2_list(F, opts);
  write_cache(file, F, L);
  return L;
}

EnumReport run_strategy(const FieldCtx& F, char strategy, const RunConfig& cfg) {
  const EnumOptions opts{cfg.workers, cfg.seed};
  if (strategy == 'A') return enumerate_A(F, opts);
  if (F.p() <= 5) throw UsageError("strategy B requires p > 5");
  if (cfg.cache_dir.empty()) return enumerate_B(F, opts);
  const auto t0 = std::chrono::steady_clock::now();
  EnumReport r = enumerate_B(F, genus2_list(F, cfg), opts);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Every class of one report matches a class of the other.
bool reports_agree(const EnumReport& a, const EnumReport& b) {
  if (a.n != b.n) return false;
  for (const HoweData& H : a.representatives) {
    bool hit = false;
    for (const HoweData& H2 : b.representatives)
      if (howe_isomorphic(H, H2)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

json report_json(const EnumReport& r, const FieldCtx& F, const RunConfig& cfg) {
  json j = to_json(r, F);
  j["seed"] = cfg.seed;
  return j;
}

void print_report_text(const EnumReport& r) {
  std::cout << "p=" << r.p << " strategy=" << r.strategy << " n=" << r.n << " ratio=" << fixed3(r.ratio)
            << " h0=" << r.h0_size;
  if (r.strategy == 'B') std::cout << " genus2=" << r.genus2_count;
  std::cout << " time=" << fixed3(r.elapsed_seconds) << "s\n";
  for (const HoweData& H : r.representatives) std::cout << "  " << to_string(H) << '\n';
}

int cmd_enumerate(const RunConfig& cfg) {
  check_prime(cfg.p);
  const FieldCtx F(cfg.p);
  std::vector<EnumReport> reports;
  if (cfg.strategy == "a" || cfg.strategy == "both") reports.push_back(run_strategy(F, 'A', cfg));
  if (cfg.strategy == "b" || cfg.strategy == "both") reports.push_back(run_strategy(F, 'B', cfg));

  int status = kOk;
  std::optional<bool> agree;
  if (reports.size() == 2) {
    agree = reports_agree(reports[0], reports[1]);
    if (!*agree) status = kMismatch;
  }
  const auto expected = published_count(cfg.p);
  if (cfg.verify && expected)
    for (const auto& r : reports)
      if (r.n != *expected) status = kMismatch;

  if (cfg.format == "json") {
    json out;
    if (reports.size() == 1) {
      out = report_json(reports[0], F, cfg);
    } else {
      out = json{{"p", cfg.p}, {"modulus", F.modulus_str()}, {"agree", *agree}};
      out["A"] = report_json(reports[0], F, cfg);
      out["B"] = report_json(reports[1], F, cfg);
    }
    std::cout << out.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "p,n,ratio\n";
    for (const auto& r : reports) std::cout << r.p << ',' << r.n << ',' << fixed3(r.ratio) << '\n';
  } else {
    std::cout << "# F_{p^2} = F_" << cfg.p << "[t]/(" << F.modulus_str() << ")\n";
    for (const auto& r : reports) print_report_text(r);
    if (agree) std::cout << "strategies " << (*agree ? "agree" : "DISAGREE") << '\n';
  }
  if (cfg.verify && expected) {
    for (const auto& r : reports)
      std::cerr << "verify p=" << cfg.p << " strategy=" << r.strategy << ": " << r.n << " vs table " << *expected
                << (r.n == *expected ? " ok" : " MISMATCH") << '\n';
  }
  return status;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.pmin > cfg.pmax) return kOk;
  std::vector<char> strategies;
  if (cfg.strategy != "b") strategies.push_back('A');
  if (cfg.strategy != "a") strategies.push_back('B');

  int status = kOk;
  json rows = json::array();
  if (cfg.format == "csv") std::cout << "p,n,ratio\n";
  for (std::uint32_t p : primes_in(cfg.pmin, cfg.pmax)) {
    const FieldCtx F(p);
    std::vector<EnumReport> reports;
    for (char s : strategies)
      if (s == 'A' || p > 5) reports.push_back(run_strategy(F, s, cfg));
    if (reports.empty()) continue;
    const EnumReport& r = reports.back();
    bool ok = true;
    if (reports.size() == 2 && reports[0].n != reports[1].n) ok = false;
    const auto expected = published_count(p);
    if (cfg.verify && expected && r.n != *expected) ok = false;
    if (!ok) status = kMismatch;

    if (cfg.format == "json") {
      json row{{"p", p}, {"n", r.n}, {"ratio", r.ratio}};
      if (expected) row["published_n"] = *expected;
      if (cfg.verify) row["ok"] = ok;
      rows.push_back(row);
    } else if (cfg.format == "csv") {
      std::cout << p << ',' << r.n << ',' << fixed3(r.ratio) << '\n';
    } else {
      std::cout << "p=" << p << " n=" << r.n << " ratio=" << fixed3(r.ratio);
      if (reports.size() == 2) std::cout << " n_A=" << reports[0].n;
      if (cfg.verify && expected) std::cout << " table=" << *expected << (ok ? " ok" : " MISMATCH");
      std::cout << " time=" << fixed3(r.elapsed_seconds) << "s\n";
    }
    std::cout.flush();
  }
  if (cfg.format == "json") std::cout << rows.dump(2) << '\n';
  return status;
}

int cmd_exists(const RunConfig& cfg) {
  std::vector<std::uint32_t> ps;
  if (cfg.p) {
    check_prime(cfg.p);
    ps.push_back(cfg.p);
  } else {
    ps = primes_in(cfg.pmin, cfg.pmax);
  }
  int status = kOk;
  std::vector<std::uint32_t> missing;
  json results = json::array();
  if (cfg.format == "csv") std::cout << "p,found\n";
  for (std::uint32_t p : ps) {
    const FieldCtx F(p);
    const auto t0 = std::chrono::steady_clock::now();
    const std::optional<HoweData> w = find_one(F, EnumOptions{cfg.workers, cfg.seed});
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (w && !is_superspecial_howe(*w)) {
      std::cerr << "error: witness for p=" << p << " is not superspecial\n";
      return kInvariant;
    }
    if (!w) {
      missing.push_back(p);
      if (cfg.verify && p > 7) status = kMismatch;
    }
    const bool fast = p % 6 == 5;
    if (cfg.format == "json") {
      results.push_back(json{{"p", p}, {"fast_path", fast}, {"witness", w ? to_json(*w) : json(nullptr)}});
    } else if (cfg.format == "csv") {
      std::cout << p << ',' << (w ? 1 : 0) << '\n';
    } else {
      std::cout << "p=" << p << (fast ? " [p=5 mod 6]" : "") << ' ' << (w ? to_string(*w) : "none")
                << " time=" << fixed3(dt) << "s\n";
    }
  }
  if (cfg.format == "json") {
    std::cout << json{{"results", results}, {"missing", missing}}.dump(2) << '\n';
  } else if (cfg.format == "text") {
    std::cout << "missing:";
    if (missing.empty()) std::cout << " none";
    for (std::uint32_t p : missing) std::cout << ' ' << p;
    std::cout << '\n';
  }
  return status;
}

int cmd_cache(const RunConfig& cfg) {
  check_prime(cfg.p);
  if (cfg.p <= 5) throw UsageError("the superspecial list needs p > 5");
  if (cfg.cache_dir.empty()) throw UsageError("no cache directory (use --cache or HOWE_CACHE)");
  const FieldCtx F(cfg.p);
  bool loaded = false;
  const SuperspecialList L = genus2_list(F, cfg, &loaded);
  const auto file = cache_file(cfg.cache_dir, cfg.p);
  if (cfg.format == "json") {
    std::cout << json{{"p", cfg.p}, {"file", file.string()}, {"count", L.size()}, {"loaded", loaded}}.dump(2) << '\n';
  } else {
    std::cout << (loaded ? "loaded " : "wrote ") << L.size() << " curves " << (loaded ? "from " : "to ")
              << file.string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superspecial Howe curves: enumeration and existence"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("HOWE_CACHE")) cfg.cache_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for randomized root finding");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case));
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--cache", cfg.cache_dir, "Cache directory for superspecial lists (default $HOWE_CACHE)");
  };
  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", cfg.strategy, "a, b or both")
        ->transform(CLI::IsMember({"a", "b", "both"}, CLI::ignore_case));
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("pmin,--pmin", cfg.pmin, "Smallest prime");
    sub->add_option("pmax,--pmax", cfg.pmax, "Largest prime");
  };

  auto* enumerate = app.add_subcommand("enumerate", "Count superspecial Howe curves for one prime");
  enumerate->add_option("--p", cfg.p, "Characteristic")->required();
  add_strategy(enumerate);
  add_common(enumerate);
  enumerate->add_flag("--verify", cfg.verify, "Compare with the published table");

  auto* table = app.add_subcommand("table", "Rows (p, n, ratio) for every prime in a range");
  add_range(table);
  add_strategy(table);
  add_common(table);
  table->add_flag("--verify", cfg.verify, "Compare with the published table; exit 2 on mismatch");

  auto* exists = app.add_subcommand("exists", "Find one superspecial Howe curve per prime");
  add_range(exists);
  exists->add_option("--p", cfg.p, "Single prime");
  add_common(exists);
  exists->add_flag("--verify", cfg.verify, "Exit 2 if some p > 7 has no witness");

  auto* cache = app.add_subcommand("cache", "Build or load the superspecial genus-2 list");
  cache->add_option("--p", cfg.p, "Characteristic")->required();
  add_common(cache);
  cache->add_flag("--refresh", cfg.refresh, "Rebuild even if a cache file exists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  for (auto& c : cfg.strategy) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto& c : cfg.format) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*table) return cmd_table(cfg);
    if (*exists) return cmd_exists(cfg);
    if (*cache) return cmd_cache(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RationalityError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
