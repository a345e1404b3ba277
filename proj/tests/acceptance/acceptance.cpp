// Acceptance gate. One line per criterion, non-zero exit if any fails.
//
//   acceptance [--only C<k>]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "productsum/enumerator.hpp"
#include "productsum/harvest.hpp"
#include "productsum/oracle.hpp"
#include "productsum/parallel.hpp"

using namespace productsum;
using h_clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "FAILED: " << what;
      pass = false;
    }
  }
};

double seconds_since(h_clock::time_point t) { return std::chrono::duration<double>(h_clock::now() - t).count(); }

auto ignore = [](std::uint64_t, std::span<const std::uint64_t>) {};

using Prefix = std::vector<std::uint64_t>;

// C1: the n = 5 example, in search order, basic solution last; < 1 ms.
void example_reproduction(Verdict& v) {
  const auto t = h_clock::now();
  const auto e = enumerate_solutions(5);
  const double dt = seconds_since(t);
  std::vector<Prefix> got;
  for (const auto& s : e.solutions) got.push_back(s.nontrivial);
  v.require(got == std::vector<Prefix>{{2, 2, 2}, {3, 3}, {5, 2}}, "solution list/order for n=5");
  v.require(dt < 1e-3, "wall time < 1 ms");
  v.detail << "order (2,2,2),(3,3),(5,2); " << dt * 1e3 << " ms";
}

// C2: solution counts from the table; <= 60 s total.
void table_counts(Verdict& v) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> rows{
      {7294, 14}, {31278, 14}, {124158, 22}, {1030986, 43}, {10027888, 50}};
  const auto t = h_clock::now();
  for (auto [n, expected] : rows) {
    const auto got = enumerate_solutions(n).solutions.size();
    v.require(got == expected, "count at n=" + std::to_string(n) + " is " + std::to_string(got));
    v.detail << n << "->" << got << " ";
  }
  const double dt = seconds_since(t);
  v.require(dt <= 60.0, "total wall time <= 60 s");
  v.detail << "in " << dt << " s";
}

// C3: exceptional numbers up to 1e5 with validation flags; <= 10 s.
void exceptional(Verdict& v) {
  const auto t = h_clock::now();
  const auto r = exceptional_scan(100'000);
  const double dt = seconds_since(t);
  v.require(r.values() == std::vector<std::uint64_t>{2, 3, 4, 6, 24, 114, 174, 444}, "exceptional list");
  for (const auto& e : r.exceptional) {
    if (e.n < 7) continue;
    v.require(e.sophie_germain, "Sophie Germain flag at " + std::to_string(e.n));
    v.require(e.mod30 == 0 || e.mod30 == 24, "mod 30 at " + std::to_string(e.n));
  }
  v.require(dt <= 10.0, "wall time <= 10 s");
  v.detail << r.exceptional.size() << " exceptional values, " << dt << " s";
}

// C4: enumerator == brute-force oracle for 2 <= n <= 60; <= 10 s.
void oracle_equivalence(Verdict& v) {
  const auto t = h_clock::now();
  for (std::uint64_t n = 2; n <= 60; ++n) {
    auto sols = enumerate_solutions(n).solutions;
    std::sort(sols.begin(), sols.end(), canonical_less);
    v.require(sols == oracle::oracle_enumerate(n), "multiset mismatch at n=" + std::to_string(n));
  }
  const double dt = seconds_since(t);
  v.require(dt <= 10.0, "wall time <= 10 s");
  v.detail << "59 lengths, " << dt << " s";
}

// C5: harvest at 1e4 vs direct enumeration at 20 random shorter lengths; no
// repeated harvested pair.
void harvest_consistency(Verdict& v) {
  const std::uint64_t upper = 10'000;
  const auto tally = harvest_all(upper);
  std::mt19937_64 rng(1030986);
  std::uniform_int_distribution<std::uint64_t> pick(2, upper - 1);
  for (int k = 0; k < 20; ++k) {
    const std::uint64_t n = pick(rng);
    const auto direct = enumerate_solutions(n).solutions.size();
    v.require(tally.count(n) == direct, "count mismatch at n'=" + std::to_string(n));
  }
  std::set<std::pair<std::uint64_t, Prefix>> seen;
  std::uint64_t raw = 0;
  enumerate(EnumConfig{.n = upper, .harvest = true}, ignore,
            [&](std::uint64_t len, std::span<const std::uint64_t> prefix) {
              ++raw;
              seen.emplace(len, Prefix(prefix.begin(), prefix.end()));
            });
  v.require(seen.size() == raw, "harvested pair repeated");
  v.detail << "20 lengths agree; " << raw << " harvested pairs, all distinct";
}

// C6: variants visit identical nodes; precheck trigger fraction windows.
void variant_equivalence(Verdict& v) {
  for (std::uint64_t n : {1'000u, 10'000u, 100'000u}) {
    v.require(variant_compare(n).nodes_equal, "node counts differ at n=" + std::to_string(n));
  }
  const double f4 = variant_compare(10'000).trigger_fraction;
  const double f6 = variant_compare(1'000'000).trigger_fraction;
  v.require(f4 >= 0.05 && f4 <= 0.15, "fraction at 1e4 outside [0.05, 0.15]");
  v.require(f6 >= 0.02 && f6 <= 0.08, "fraction at 1e6 outside [0.02, 0.08]");
  v.detail << "nodes equal; fraction(1e4)=" << f4 << " fraction(1e6)=" << f6;
}

// C7: theta / A(n) strictly decreasing and below 1.
void normalized_trend(Verdict& v) {
  double previous = 0.0;
  bool first = true;
  for (std::uint64_t n : {7294u, 31278u, 124158u, 1030986u}) {
    const auto stats = enumerate_solutions(n).stats;
    const double ratio = normalize_theta(n, stats.theta).ratio;
    v.detail << n << ":" << ratio << " ";
    v.require(ratio < 1.0, "ratio >= 1 at n=" + std::to_string(n));
    if (!first) v.require(ratio < previous, "ratio not decreasing at n=" + std::to_string(n) + " ");
    previous = ratio;
    first = false;
  }
}

// C8: parallel runs at 1e6 agree for 1, 2, 4, 8 workers.
void parallel_determinism(Verdict& v) {
  const EnumConfig config{.n = 1'000'000, .harvest = true};
  const auto base = run_parallel(config, 1);
  for (int workers : {2, 4, 8}) {
    const auto r = run_parallel(config, workers);
    v.require(r.solutions == base.solutions, "solutions differ with " + std::to_string(workers) + " workers");
    v.require(*r.tally == *base.tally, "tally differs with " + std::to_string(workers) + " workers");
  }
  v.detail << base.solutions.size() << " solutions, tally total " << base.tally->total() << " identical for 1/2/4/8";
}

// C9: structural invariants on every solution with n <= 1e4. A harvest run
// at 1e4 yields each of them exactly once.
std::uint64_t invariant_violations(std::uint64_t n, std::span<const std::uint64_t> a) {
  std::uint64_t bad = 0;
  const std::size_t k = a.size();
  std::uint64_t p = 1, s = 0;
  for (std::size_t j = 0; j < k; ++j) {
    p *= a[j];
    s += a[j];
    const std::uint64_t rhs = s + n - (j + 1);
    if (j + 1 < k && !(p < rhs)) ++bad;
    if (j + 1 == k && p != rhs) ++bad;
    if (a[j] > n) ++bad;
  }
  if (p > 2 * n) ++bad;
  const bool basic = k == 2 && a[0] == n && a[1] == 2;
  if (a[0] == n && !basic) ++bad;
  // entries >= m number fewer than log_m(n) + 1, i.e. m^(count-1) < n.
  // Holds for n >= 3 only; n = 2 has the single solution (2,2).
  for (std::uint64_t m = 2; n >= 3 && m <= a[0]; ++m) {
    const auto count = static_cast<std::uint64_t>(std::count_if(a.begin(), a.end(), [m](auto x) { return x >= m; }));
    if (count == 0) break;
    std::uint64_t power = 1;
    for (std::uint64_t c = 1; c < count && power < n; ++c) power *= m;
    if (power >= n) ++bad;
  }
  return bad;
}

void invariant_suite(Verdict& v) {
  std::uint64_t checked = 0, bad = 0;
  auto check = [&](std::uint64_t len, std::span<const std::uint64_t> prefix) {
    ++checked;
    bad += invariant_violations(len, prefix);
  };
  enumerate(EnumConfig{.n = 10'000, .harvest = true}, check, check);
  v.require(bad == 0, std::to_string(bad) + " violations");
  v.require(checked > 10'000, "too few solutions checked");
  v.detail << checked << " solutions, " << bad << " violations";
}

// C10: closed-form constructions appear in the enumeration.
void constructor_coverage(Verdict& v) {
  auto contains = [](const Solution& sol) {
    const auto sols = enumerate_solutions(sol.n).solutions;
    return std::find(sols.begin(), sols.end(), sol) != sols.end();
  };
  std::uint64_t factor_cases = 0;
  for (std::uint64_t n = 5; n <= 2000; ++n) {
    const auto pairs = oracle::odd_factor_pairs(n);
    if (pairs.empty()) continue;
    const auto sols = enumerate_solutions(n).solutions;
    for (auto [a, b] : pairs) {
      const auto sol = oracle::reble_factor_solution(n, a, b);
      ++factor_cases;
      v.require(std::find(sols.begin(), sols.end(), sol) != sols.end(),
                "factor construction missing at n=" + std::to_string(n));
    }
  }
  for (std::uint64_t j = 0; j <= 50; ++j) {
    v.require(contains(oracle::reble_mod12_solution(j)), "mod-12 construction missing at j=" + std::to_string(j));
  }
  v.detail << factor_cases << " factor constructions, 51 mod-12 constructions";
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  if (argc == 3 && std::string(argv[1]) == "--only") only = argv[2];

  const std::vector<std::tuple<std::string, std::string, std::function<void(Verdict&)>>> criteria{
      {"C1", "example reproduction", example_reproduction},
      {"C2", "table solution counts", table_counts},
      {"C3", "exceptional scan to 1e5", exceptional},
      {"C4", "oracle equivalence 2..60", oracle_equivalence},
      {"C5", "harvest consistency", harvest_consistency},
      {"C6", "variant equivalence", variant_equivalence},
      {"C7", "normalized trend", normalized_trend},
      {"C8", "parallel determinism", parallel_determinism},
      {"C9", "invariant suite", invariant_suite},
      {"C10", "constructor coverage", constructor_coverage},
  };

  int failures = 0;
  for (const auto& [id, name, fn] : criteria) {
    if (!only.empty() && only != id) continue;
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::printf("[%s] %-4s %-26s %s\n", v.pass ? "PASS" : "FAIL", id.c_str(), name.c_str(), v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
