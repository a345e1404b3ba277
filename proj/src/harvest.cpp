#include "productsum/harvest.hpp"

#include <cmath>

#include "productsum/oracle.hpp"
#include "productsum/parallel.hpp"

namespace productsum {

SolutionTally harvest_all(std::uint64_t upper, int workers, Variant variant) {
  const EnumConfig config{.n = upper, .variant = variant, .harvest = true};
  ParallelResult result = workers > 1 ? run_parallel(config, workers) : run_sequential(config);
  return std::move(*result.tally);
}

std::vector<std::uint64_t> ExceptionalReport::values() const {
  std::vector<std::uint64_t> out;
  out.reserve(exceptional.size());
  for (const auto& e : exceptional) out.push_back(e.n);
  return out;
}

ExceptionalReport exceptional_from_tally(const SolutionTally& tally) {
  ExceptionalReport report{tally.upper(), {}};
  // Flags are informational only; they never filter the list.
  for (std::uint64_t n = 2; n <= tally.upper(); ++n) {
    if (tally.count(n) != 1) continue;
    report.exceptional.push_back({n, oracle::is_sophie_germain_shifted(n), n % 30});
  }
  return report;
}

ExceptionalReport exceptional_scan(std::uint64_t upper, int workers) {
  return exceptional_from_tally(harvest_all(upper, workers));
}

double asymptotic_scale(double n) {
  const double log_n = std::log(n);
  return n * std::exp(2.0 * std::sqrt(log_n)) / std::pow(log_n, 0.75);
}

NormalizedStats normalize_theta(std::uint64_t n, std::uint64_t theta) {
  if (n < 3) throw GuardError("normalization needs n >= 3");
  return {n, theta, static_cast<double>(theta) / asymptotic_scale(static_cast<double>(n))};
}

VariantComparison variant_compare(std::uint64_t n, CandidateScan scan) {
  if (n < 3) throw GuardError("variant comparison needs n >= 3");
  auto ignore = [](std::uint64_t, std::span<const std::uint64_t>) {};
  VariantComparison cmp;
  cmp.n = n;
  cmp.feasibility_only = enumerate(EnumConfig{.n = n, .scan = scan}, ignore, ignore);
  cmp.precheck = enumerate(EnumConfig{.n = n, .variant = Variant::Precheck2n, .scan = scan}, ignore, ignore);
  const SearchStats& a = cmp.feasibility_only;
  const SearchStats& b = cmp.precheck;
  cmp.nodes_equal = a.theta == b.theta && a.calls == b.calls && a.records == b.records &&
                    a.prunes() == b.prunes() && a.max_depth == b.max_depth;
  cmp.trigger_fraction =
      b.prunes() == 0 ? 0.0 : static_cast<double>(b.prunes_precheck2n) / static_cast<double>(b.prunes());
  return cmp;
}

}  // namespace productsum
