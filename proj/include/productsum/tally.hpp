#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace productsum {

// Per-length solution counts f(n') for 2 <= n' <= upper. Stored densely up
// to kDenseLimit, as an ordered map above it. Tallies over the same range
// merge by pointwise addition.
class SolutionTally {
 public:
  static constexpr std::uint64_t kDenseLimit = 10'000'000;

  SolutionTally() = default;
  explicit SolutionTally(std::uint64_t upper);

  std::uint64_t upper() const { return upper_; }
  bool dense() const { return upper_ <= kDenseLimit; }

  void add(std::uint64_t length, std::uint64_t count = 1);
  std::uint64_t count(std::uint64_t length) const;

  // Non-zero entries in ascending length order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries() const;

  // Sum of all counts.
  std::uint64_t total() const;

  SolutionTally& merge(const SolutionTally& other);

  bool operator==(const SolutionTally& other) const;

 private:
  std::uint64_t upper_ = 0;
  std::vector<std::uint64_t> dense_;
  std::map<std::uint64_t, std::uint64_t> sparse_;
};

}  // namespace productsum
