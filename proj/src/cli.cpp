#include "productsum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "productsum/enumerator.hpp"
#include "productsum/harvest.hpp"
#include "productsum/io.hpp"
#include "productsum/oracle.hpp"
#include "productsum/parallel.hpp"

namespace productsum::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t checked_length(std::int64_t value, const char* flag) {
  if (value < 2 || static_cast<std::uint64_t>(value) > kMaxLength) {
    throw GuardError(std::string(flag) + " must lie in [2, " + std::to_string(kMaxLength) + "], got " +
                     std::to_string(value));
  }
  return static_cast<std::uint64_t>(value);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

struct EnumerateOptions {
  std::int64_t n = 0;
  std::string emit = "jsonl";
  int threads = 1;
  bool sorted = false;
  std::string harvest_path;
};

void write_solution(std::ostream& out, const std::string& emit, std::uint64_t n,
                    std::span<const std::uint64_t> prefix) {
  if (emit == "jsonl") {
    out << io::solution_jsonl(n, prefix) << '\n';
  } else if (emit == "csv") {
    out << n << ',' << (n - prefix.size()) << ',';
    for (std::size_t j = 0; j < prefix.size(); ++j) out << (j ? " " : "") << prefix[j];
    out << '\n';
  }
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  EnumConfig config{.n = checked_length(opt.n, "--n")};
  config.harvest = !opt.harvest_path.empty();
  config.emit_order = opt.sorted ? EmitOrder::CanonicalSorted : EmitOrder::DfsOrder;
  if (opt.emit == "csv") out << "n,ones,prefix\n";

  std::uint64_t found = 0;
  std::optional<SolutionTally> tally;
  if (opt.threads > 1) {
    ParallelResult result = run_parallel(config, opt.threads);
    for (const auto& sol : result.solutions) write_solution(out, opt.emit, sol.n, sol.nontrivial);
    found = result.solutions.size();
    tally = std::move(result.tally);
  } else {
    if (config.harvest) tally.emplace(config.n);
    SearchStats stats = enumerate(
        config,
        [&](std::uint64_t n, std::span<const std::uint64_t> prefix) {
          ++found;
          write_solution(out, opt.emit, n, prefix);
        },
        [&](std::uint64_t len, std::span<const std::uint64_t>) { tally->add(len); });
    if (tally) tally->add(config.n, stats.records);
  }
  if (opt.emit == "count") out << found << '\n';
  if (tally) {
    std::ofstream file = open_output(opt.harvest_path);
    io::write_tally_csv(file, *tally);
  }
  return kOk;
}

struct ScanOptions {
  std::int64_t max = 0;
  bool exceptional_only = false;
  std::string out_path;
  int threads = 1;
};

int cmd_scan(const ScanOptions& opt, std::ostream& out) {
  const SolutionTally tally = harvest_all(checked_length(opt.max, "--max"), opt.threads);
  if (!opt.out_path.empty()) {
    std::ofstream file = open_output(opt.out_path);
    io::write_tally_csv(file, tally);
  }
  if (opt.exceptional_only || !opt.out_path.empty()) {
    for (const auto& entry : exceptional_from_tally(tally).exceptional) {
      out << io::exceptional_jsonl(entry) << '\n';
    }
  } else {
    io::write_tally_csv(out, tally);
  }
  return kOk;
}

struct BenchOptions {
  std::int64_t n = 0;
  std::string variant = "feasibility";
  int threads = 1;
  int repeat = 1;
  bool full_scan = false;
};

io::RunReport bench_one(const BenchOptions& opt, std::uint64_t n, Variant variant) {
  const EnumConfig config{
      .n = n,
      .variant = variant,
      .scan = opt.full_scan ? CandidateScan::FullRange : CandidateScan::StopAtFirstFailure};
  io::RunReport report;
  report.n = n;
  report.variant = variant;
  report.workers = opt.threads;
  std::vector<double> times;
  for (int r = 0; r < opt.repeat; ++r) {
    const auto start = Clock::now();
    ParallelResult result = opt.threads > 1 ? run_parallel(config, opt.threads) : run_sequential(config);
    times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    if (r > 0 && !(result.stats == report.stats)) {
      throw std::runtime_error("search statistics differ between repeats");
    }
    report.stats = result.stats;
    report.solutions = result.solutions.size();
  }
  std::sort(times.begin(), times.end());
  report.wall_seconds = times[times.size() / 2];
  if (n >= 3) report.ratio = normalize_theta(n, report.stats.theta).ratio;
  return report;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  const std::uint64_t n = checked_length(opt.n, "--n");
  if (opt.variant == "both") {
    const io::RunReport plain = bench_one(opt, n, Variant::FeasibilityOnly);
    const io::RunReport pre = bench_one(opt, n, Variant::Precheck2n);
    out << io::run_report_json(plain) << '\n' << io::run_report_json(pre) << '\n';
    const SearchStats& a = plain.stats;
    const SearchStats& b = pre.stats;
    nlohmann::ordered_json cmp;
    cmp["n"] = n;
    cmp["nodes_equal"] = a.theta == b.theta && a.calls == b.calls && a.records == b.records &&
                         a.prunes() == b.prunes();
    cmp["trigger_fraction"] =
        b.prunes() == 0 ? 0.0 : static_cast<double>(b.prunes_precheck2n) / static_cast<double>(b.prunes());
    out << cmp.dump() << '\n';
    return kOk;
  }
  const Variant v = opt.variant == "precheck2n" ? Variant::Precheck2n : Variant::FeasibilityOnly;
  out << io::run_report_json(bench_one(opt, n, v)) << '\n';
  return kOk;
}

struct VerifyOptions {
  std::string file;
  bool oracle = false;
  std::int64_t max = 0;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.oracle) {
    const std::int64_t max = opt.max;
    if (max < 2 || static_cast<std::uint64_t>(max) > oracle::kOracleMaxLength) {
      throw GuardError("--max must lie in [2, " + std::to_string(oracle::kOracleMaxLength) + "] with --oracle");
    }
    for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(max); ++n) {
      auto found = enumerate_solutions(n).solutions;
      std::sort(found.begin(), found.end(), canonical_less);
      if (found != oracle::oracle_enumerate(n)) {
        err << "enumerator and oracle disagree at n=" << n << '\n';
        return kMismatch;
      }
    }
    out << "oracle agrees for 2 <= n <= " << max << '\n';
    return kOk;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (opt.file != "-") {
    file.open(opt.file);
    if (!file) throw std::runtime_error("cannot open " + opt.file);
    in = &file;
  }
  std::string line;
  std::uint64_t checked = 0;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    bool ok = false;
    try {
      const Solution sol = io::parse_solution_jsonl(line);
      ok = sol.n <= kMaxLength && oracle::verify_solution(sol);
    } catch (const io::ParseError& e) {
      err << e.what() << '\n';
    }
    if (!ok) {
      err << "not a solution: " << line << '\n';
      return kMismatch;
    }
    ++checked;
  }
  out << checked << " records verified\n";
  return kOk;
}

std::vector<char*> make_argv(std::vector<std::string>& storage) {
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return argv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate integer sequences whose product equals their sum"};
  app.name("productsum");
  app.require_subcommand(1);

  EnumerateOptions en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every solution of length n");
  enumerate_cmd->add_option("--n", en.n, "Target length")->required();
  enumerate_cmd->add_option("--emit", en.emit, "Output format")->check(CLI::IsMember({"jsonl", "csv", "count"}));
  enumerate_cmd->add_option("--threads", en.threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--sorted", en.sorted, "Canonical order instead of search order");
  enumerate_cmd->add_option("--harvest", en.harvest_path, "Write the per-length tally of all n' <= n to this CSV");

  ScanOptions sc;
  auto* scan_cmd = app.add_subcommand("scan", "Count solutions for every length up to --max");
  scan_cmd->add_option("--max", sc.max, "Largest length")->required();
  scan_cmd->add_flag("--exceptional-only", sc.exceptional_only, "Print only lengths with a single solution");
  scan_cmd->add_option("--out", sc.out_path, "Write the tally CSV here");
  scan_cmd->add_option("--threads", sc.threads, "Worker threads")->check(CLI::PositiveNumber);

  BenchOptions be;
  auto* bench_cmd = app.add_subcommand("bench", "Time a full search and report step counts");
  bench_cmd->add_option("--n", be.n, "Target length")->required();
  bench_cmd->add_option("--variant", be.variant, "Pruning variant")
      ->check(CLI::IsMember({"feasibility", "precheck2n", "both"}));
  bench_cmd->add_option("--threads", be.threads, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", be.repeat, "Repetitions (median time reported)")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--full-scan", be.full_scan, "Try every candidate at each level");

  VerifyOptions ve;
  auto* verify_cmd = app.add_subcommand("verify", "Check solutions from a file or against the oracle");
  auto* file_opt = verify_cmd->add_option("--file", ve.file, "JSONL solutions ('-' for stdin)");
  auto* oracle_flag = verify_cmd->add_flag("--oracle", ve.oracle, "Cross-check enumerator and oracle");
  auto* max_opt = verify_cmd->add_option("--max", ve.max, "Largest length for --oracle");
  oracle_flag->needs(max_opt);
  file_opt->excludes(oracle_flag);
  verify_cmd->require_option(1, 2);

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("productsum");
  std::vector<char*> argv = make_argv(storage);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadFlags;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(en, out);
    if (*scan_cmd) return cmd_scan(sc, out);
    if (*bench_cmd) return cmd_bench(be, out);
    return cmd_verify(ve, out, err);
  } catch (const GuardError& e) {
    err << "productsum: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "productsum: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace productsum::cli
