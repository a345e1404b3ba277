#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "productsum/solution.hpp"

namespace productsum {

enum class Variant : std::uint8_t { FeasibilityOnly, Precheck2n };
enum class EmitOrder : std::uint8_t { DfsOrder, CanonicalSorted };

// StopAtFirstFailure leaves a level as soon as a candidate is recorded or
// pruned; every larger candidate at that level would be pruned as well.
// FullRange keeps trying every candidate up to the level bound.
enum class CandidateScan : std::uint8_t { StopAtFirstFailure, FullRange };

struct EnumConfig {
  std::uint64_t n = 0;
  Variant variant = Variant::FeasibilityOnly;
  bool harvest = false;
  EmitOrder emit_order = EmitOrder::DfsOrder;
  CandidateScan scan = CandidateScan::StopAtFirstFailure;

  // Throws GuardError unless 2 <= n <= kMaxLength.
  void validate() const;
};

enum class Step : std::uint8_t { Prune, Record, Extend };
enum class PruneCause : std::uint8_t { None, Feasibility, Precheck2n };

struct StepOutcome {
  Step step = Step::Extend;
  PruneCause cause = PruneCause::None;
  std::uint64_t product = 0;  // p'
  std::uint64_t sum = 0;      // s'
};

struct SearchState {
  std::vector<std::uint64_t> prefix;
  std::uint64_t p = 1;
  std::uint64_t s = 0;
  std::uint64_t i = 0;

  // Appends one entry and updates p, s, i.
  void push(std::uint64_t a);
};

struct CandidateRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
};

struct SearchStats {
  std::uint64_t theta = 0;  // candidate feasibility evaluations
  std::uint64_t calls = 0;  // recursive invocations (one per extended prefix, plus the root)
  std::uint64_t prunes_feasibility = 0;
  std::uint64_t prunes_precheck2n = 0;
  std::uint64_t records = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t harvested = 0;

  std::uint64_t prunes() const { return prunes_feasibility + prunes_precheck2n; }
  std::uint64_t extends() const { return theta - prunes() - records; }

  SearchStats& merge(const SearchStats& other);
  bool operator==(const SearchStats&) const = default;
};

// One candidate check: extends the prefix (p, s, i) by a_prime and
// classifies the result against p' <= s' + n - (i + 1).
constexpr StepOutcome feasibility_classify(std::uint64_t p, std::uint64_t s, std::uint64_t i,
                                           std::uint64_t a_prime, std::uint64_t n,
                                           Variant variant = Variant::FeasibilityOnly) {
  const std::uint64_t product = p * a_prime;
  const std::uint64_t sum = s + a_prime;
  if (variant == Variant::Precheck2n && product > 2 * n) {
    return {Step::Prune, PruneCause::Precheck2n, product, sum};
  }
  const std::uint64_t bound = sum + n - (i + 1);
  if (product > bound) return {Step::Prune, PruneCause::Feasibility, product, sum};
  if (product == bound) return {Step::Record, PruneCause::None, product, sum};
  return {Step::Extend, PruneCause::None, product, sum};
}

CandidateRange candidate_range(const SearchState& state, std::uint64_t n);

// Length n' = p - s + i for which a strictly feasible prefix is itself a
// solution once padded with ones.
constexpr std::uint64_t harvested_length(std::uint64_t p, std::uint64_t s, std::uint64_t i) {
  return p - s + i;
}

// floor(log2 n) + 2: no prefix explored for n grows longer than this.
std::uint64_t depth_bound(std::uint64_t n);

struct NoVisitor {
  void operator()(std::span<const std::uint64_t>, const StepOutcome&) const {}
};

namespace detail {

inline constexpr std::size_t kPrefixCapacity = 64;

// Depth-first search kernel. Sinks are called as sink(length, prefix); the
// visitor sees every candidate check with the extended prefix.
template <class SolutionSink, class HarvestSink, class Visitor>
class PrefixSearch {
 public:
  PrefixSearch(const EnumConfig& config, SolutionSink& on_solution, HarvestSink& on_harvest,
               SearchStats& stats, Visitor& visitor)
      : n_(config.n),
        variant_(config.variant),
        harvest_(config.harvest),
        stop_at_failure_(config.scan == CandidateScan::StopAtFirstFailure),
        on_solution_(on_solution),
        on_harvest_(on_harvest),
        stats_(stats),
        visitor_(visitor) {}

  void run_root() { descend(1, 0, 0); }

  // Checks `parent + a_prime` and, if it extends, searches below it.
  Step run_candidate(std::span<const std::uint64_t> parent, std::uint64_t p, std::uint64_t s,
                     std::uint64_t a_prime) {
    std::copy(parent.begin(), parent.end(), prefix_.begin());
    return check(p, s, parent.size(), a_prime);
  }

  void descend(std::uint64_t p, std::uint64_t s, std::size_t depth) {
    ++stats_.calls;
    const std::uint64_t m = depth == 0 ? n_ : prefix_[depth - 1];
    for (std::uint64_t a = 2; a <= m; ++a) {
      const Step step = check(p, s, depth, a);
      if (step != Step::Extend && stop_at_failure_) break;
    }
  }

 private:
  Step check(std::uint64_t p, std::uint64_t s, std::size_t depth, std::uint64_t a) {
    assert(depth < kPrefixCapacity);
    prefix_[depth] = a;
    const std::size_t length = depth + 1;
    const StepOutcome out = feasibility_classify(p, s, depth, a, n_, variant_);
    ++stats_.theta;
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, length);
    const std::span<const std::uint64_t> current(prefix_.data(), length);
    visitor_(current, out);
    switch (out.step) {
      case Step::Prune:
        if (out.cause == PruneCause::Precheck2n) {
          ++stats_.prunes_precheck2n;
        } else {
          ++stats_.prunes_feasibility;
        }
        break;
      case Step::Record:
        ++stats_.records;
        on_solution_(n_, current);
        break;
      case Step::Extend:
        if (harvest_ && length >= 2) {
          ++stats_.harvested;
          on_harvest_(harvested_length(out.product, out.sum, length), current);
        }
        descend(out.product, out.sum, length);
        break;
    }
    return out.step;
  }

  std::uint64_t n_;
  Variant variant_;
  bool harvest_;
  bool stop_at_failure_;
  SolutionSink& on_solution_;
  HarvestSink& on_harvest_;
  SearchStats& stats_;
  Visitor& visitor_;
  std::array<std::uint64_t, kPrefixCapacity> prefix_{};
};

}  // namespace detail

// Sequential search for all solutions of length config.n.
//
// Solutions reach on_solution in depth-first order (ascending candidates at
// every level, so the basic solution comes last) unless emit_order asks for
// canonical order, in which case they are buffered and sorted first. With
// harvest enabled, every strictly feasible prefix of length >= 2 is passed to
// on_harvest together with the shorter length it solves.
template <class SolutionSink, class HarvestSink, class Visitor = NoVisitor>
SearchStats enumerate(const EnumConfig& config, SolutionSink&& on_solution, HarvestSink&& on_harvest,
                      Visitor&& visitor = {}) {
  config.validate();
  SearchStats stats;
  if (config.emit_order == EmitOrder::CanonicalSorted) {
    std::vector<Solution> buffer;
    auto collect = [&](std::uint64_t n, std::span<const std::uint64_t> prefix) {
      buffer.push_back(Solution{n, {prefix.begin(), prefix.end()}});
    };
    detail::PrefixSearch search(config, collect, on_harvest, stats, visitor);
    search.run_root();
    std::sort(buffer.begin(), buffer.end(), canonical_less);
    for (const auto& sol : buffer) on_solution(sol.n, std::span<const std::uint64_t>(sol.nontrivial));
  } else {
    detail::PrefixSearch search(config, on_solution, on_harvest, stats, visitor);
    search.run_root();
  }
  return stats;
}

struct Enumeration {
  std::vector<Solution> solutions;
  SearchStats stats;
};

// Collects the solutions of length n (no harvesting).
Enumeration enumerate_solutions(std::uint64_t n, Variant variant = Variant::FeasibilityOnly,
                                CandidateScan scan = CandidateScan::StopAtFirstFailure);

}  // namespace productsum
