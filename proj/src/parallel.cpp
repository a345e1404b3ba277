#include "productsum/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace productsum {

Granularity default_granularity(std::uint64_t) {
  // Depth-1 subtrees are already small and even (at n ~ 1e6 the largest holds
  // under 0.2% of all checks), while Level2 yields about n ln n units.
  return Granularity::Level1;
}

namespace {

bool stops(const EnumConfig& config, Step step) {
  return step != Step::Extend && config.scan == CandidateScan::StopAtFirstFailure;
}

}  // namespace

RootSplit partition_roots(const EnumConfig& config, Granularity granularity) {
  config.validate();
  const std::uint64_t n = config.n;
  RootSplit split;
  split.overhead.calls = 1;

  // The first entry always extends: a < a + n - 1.
  for (std::uint64_t a1 = 2; a1 <= n; ++a1) {
    if (granularity == Granularity::Level1) {
      WorkUnit unit;
      unit.entries = {a1, 0};
      unit.length = 1;
      unit.outcome = feasibility_classify(1, 0, 0, a1, n, config.variant).step;
      split.units.push_back(unit);
      continue;
    }
    ++split.overhead.theta;
    ++split.overhead.calls;
    split.overhead.max_depth = std::max<std::uint64_t>(split.overhead.max_depth, 1);
    for (std::uint64_t a2 = 2; a2 <= a1; ++a2) {
      WorkUnit unit;
      unit.entries = {a1, a2};
      unit.length = 2;
      unit.parent_p = a1;
      unit.parent_s = a1;
      unit.outcome = feasibility_classify(a1, a1, 1, a2, n, config.variant).step;
      split.units.push_back(unit);
      if (stops(config, unit.outcome)) break;
    }
  }
  return split;
}

namespace {

struct WorkerResult {
  std::vector<Solution> solutions;
  std::optional<SolutionTally> tally;
  SearchStats stats;
};

void run_unit(const EnumConfig& config, const WorkUnit& unit, WorkerResult& local) {
  auto on_solution = [&](std::uint64_t len, std::span<const std::uint64_t> prefix) {
    local.solutions.push_back(Solution{len, {prefix.begin(), prefix.end()}});
  };
  auto on_harvest = [&](std::uint64_t len, std::span<const std::uint64_t>) {
    if (local.tally) local.tally->add(len);
  };
  NoVisitor visitor;
  detail::PrefixSearch search(config, on_solution, on_harvest, local.stats, visitor);
  search.run_candidate(unit.parent(), unit.parent_p, unit.parent_s, unit.candidate());
}

ParallelResult finish(const EnumConfig& config, WorkerResult merged) {
  ParallelResult result;
  result.solutions = std::move(merged.solutions);
  std::sort(result.solutions.begin(), result.solutions.end(), canonical_less);
  result.stats = merged.stats;
  if (config.harvest) {
    merged.tally->add(config.n, result.stats.records);
    result.tally = std::move(merged.tally);
  }
  return result;
}

}  // namespace

ParallelResult run_parallel(const EnumConfig& config, int workers,
                            std::optional<Granularity> granularity) {
  config.validate();
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  const RootSplit split = partition_roots(config, granularity.value_or(default_granularity(config.n)));
  const auto& units = split.units;

  WorkerResult merged;
  merged.stats = split.overhead;
  if (config.harvest) merged.tally.emplace(config.n);
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto note_failure = [&] {
#pragma omp critical(productsum_failure)
    {
      if (!failure) failure = std::current_exception();
      failed = true;
    }
  };

#pragma omp parallel num_threads(workers)
  {
    WorkerResult local;
    try {
      if (config.harvest) local.tally.emplace(config.n);
    } catch (...) {
      note_failure();
    }

#pragma omp for schedule(dynamic, 1)
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        run_unit(config, units[u], local);
      } catch (...) {
        note_failure();
      }
    }

#pragma omp critical(productsum_merge)
    {
      if (!failure) {
        try {
          merged.stats.merge(local.stats);
          merged.solutions.insert(merged.solutions.end(), local.solutions.begin(), local.solutions.end());
          if (merged.tally) merged.tally->merge(*local.tally);
        } catch (...) {
          if (!failure) failure = std::current_exception();
          failed = true;
        }
      }
    }
  }

  if (failure) std::rethrow_exception(failure);
  return finish(config, std::move(merged));
}

ParallelResult run_sequential(const EnumConfig& config) {
  config.validate();
  WorkerResult merged;
  if (config.harvest) merged.tally.emplace(config.n);
  EnumConfig dfs = config;
  dfs.emit_order = EmitOrder::DfsOrder;
  merged.stats = enumerate(
      dfs,
      [&](std::uint64_t len, std::span<const std::uint64_t> prefix) {
        merged.solutions.push_back(Solution{len, {prefix.begin(), prefix.end()}});
      },
      [&](std::uint64_t len, std::span<const std::uint64_t>) { merged.tally->add(len); });
  return finish(config, std::move(merged));
}

}  // namespace productsum
