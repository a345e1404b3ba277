#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "productsum/enumerator.hpp"
#include "productsum/tally.hpp"

namespace productsum {

enum class Granularity : std::uint8_t { Level1, Level2 };

// Level1 for every n. Level2 stays available for experiments; it produces a
// unit per feasible (a1, a2) pair, roughly n ln n of them.
Granularity default_granularity(std::uint64_t n);

// A single candidate check at depth 1 or 2 plus the subtree below it. The
// unit's last entry is the candidate; parent_p and parent_s describe the
// prefix before it.
struct WorkUnit {
  std::array<std::uint64_t, 2> entries{};
  std::uint8_t length = 0;
  std::uint64_t parent_p = 1;
  std::uint64_t parent_s = 0;
  Step outcome = Step::Extend;  // Record/Prune units carry no subtree

  std::span<const std::uint64_t> prefix() const { return {entries.data(), length}; }
  std::span<const std::uint64_t> parent() const { return {entries.data(), length - 1u}; }
  std::uint64_t candidate() const { return entries[length - 1u]; }
};

struct RootSplit {
  std::vector<WorkUnit> units;
  // Work done by the partitioner itself: the root call and, for Level2, the
  // depth-1 checks and calls. Added back once when results are merged.
  SearchStats overhead;
};

// Splits the search tree for config.n into disjoint units that cover it. The
// candidates follow config.scan, so under StopAtFirstFailure no unit is
// produced past the first Record/Prune at a level.
RootSplit partition_roots(const EnumConfig& config, Granularity granularity);

struct ParallelResult {
  std::vector<Solution> solutions;      // canonical order
  std::optional<SolutionTally> tally;   // present when config.harvest
  SearchStats stats;
};

// Runs the units on `workers` OpenMP threads with dynamic scheduling and merges
// the per-thread results. The merged output is independent of the worker
// count. The first exception raised inside a worker is rethrown after the
// parallel region; nothing partial is returned.
ParallelResult run_parallel(const EnumConfig& config, int workers,
                            std::optional<Granularity> granularity = std::nullopt);

// Serial counterpart of run_parallel built on enumerate(); kept as the
// reference the parallel path is tested against.
ParallelResult run_sequential(const EnumConfig& config);

}  // namespace productsum
