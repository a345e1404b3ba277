#pragma once

#include <cstdint>
#include <vector>

#include "productsum/enumerator.hpp"
#include "productsum/tally.hpp"

namespace productsum {

// Runs one search at length `upper` with harvesting on. Records count toward
// f(upper); harvested prefixes count toward the shorter lengths they solve.
// Each solution of length <= upper shows up exactly once, so the tally is
// f(n') for every n' in [2, upper]. workers > 1 splits the search via
// run_parallel.
SolutionTally harvest_all(std::uint64_t upper, int workers = 1,
                          Variant variant = Variant::FeasibilityOnly);

struct ExceptionalEntry {
  std::uint64_t n = 0;
  bool sophie_germain = false;  // n - 1 and 2n - 1 prime
  std::uint64_t mod30 = 0;

  bool operator==(const ExceptionalEntry&) const = default;
};

struct ExceptionalReport {
  std::uint64_t upper = 0;
  std::vector<ExceptionalEntry> exceptional;  // ascending

  std::vector<std::uint64_t> values() const;
};

// Lengths in [2, tally.upper()] whose only solution is the basic one.
ExceptionalReport exceptional_from_tally(const SolutionTally& tally);
ExceptionalReport exceptional_scan(std::uint64_t upper, int workers = 1);

// A(n) = n e^{2 sqrt(ln n)} / (ln n)^{3/4}.
double asymptotic_scale(double n);

struct NormalizedStats {
  std::uint64_t n = 0;
  std::uint64_t theta = 0;
  double ratio = 0.0;  // theta / A(n)
};

// Throws GuardError for n < 3.
NormalizedStats normalize_theta(std::uint64_t n, std::uint64_t theta);

struct VariantComparison {
  std::uint64_t n = 0;
  SearchStats feasibility_only;
  SearchStats precheck;
  bool nodes_equal = false;
  // Share of pruned candidates that already failed the product > 2n test.
  double trigger_fraction = 0.0;
};

// Runs both variants sequentially at length n (n >= 3).
VariantComparison variant_compare(std::uint64_t n, CandidateScan scan = CandidateScan::StopAtFirstFailure);

}  // namespace productsum
