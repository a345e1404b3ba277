#include "productsum/enumerator.hpp"

#include <bit>
#include <sstream>

namespace productsum {

std::string to_string(const Solution& s) {
  std::ostringstream os;
  os << "n=" << s.n << " (";
  for (std::size_t j = 0; j < s.nontrivial.size(); ++j) {
    if (j) os << ',';
    os << s.nontrivial[j];
  }
  os << ")+" << s.ones() << " ones";
  return os.str();
}

void EnumConfig::validate() const {
  if (n < 2) throw GuardError("target length must be at least 2, got " + std::to_string(n));
  if (n > kMaxLength) {
    throw GuardError("target length " + std::to_string(n) + " exceeds the 64-bit guard " +
                     std::to_string(kMaxLength));
  }
}

void SearchState::push(std::uint64_t a) {
  prefix.push_back(a);
  p *= a;
  s += a;
  ++i;
}

CandidateRange candidate_range(const SearchState& state, std::uint64_t n) {
  return {2, state.prefix.empty() ? n : state.prefix.back()};
}

std::uint64_t depth_bound(std::uint64_t n) {
  return static_cast<std::uint64_t>(std::bit_width(n)) - 1 + 2;
}

SearchStats& SearchStats::merge(const SearchStats& other) {
  theta += other.theta;
  calls += other.calls;
  prunes_feasibility += other.prunes_feasibility;
  prunes_precheck2n += other.prunes_precheck2n;
  records += other.records;
  harvested += other.harvested;
  max_depth = std::max(max_depth, other.max_depth);
  return *this;
}

Enumeration enumerate_solutions(std::uint64_t n, Variant variant, CandidateScan scan) {
  Enumeration result;
  EnumConfig config{.n = n, .variant = variant, .scan = scan};
  result.stats = enumerate(
      config,
      [&](std::uint64_t len, std::span<const std::uint64_t> prefix) {
        result.solutions.push_back(Solution{len, {prefix.begin(), prefix.end()}});
      },
      [](std::uint64_t, std::span<const std::uint64_t>) {});
  return result;
}

}  // namespace productsum
