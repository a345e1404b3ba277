#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace productsum {

// Largest accepted target length. Keeps every transient product p' <= 2n^2
// inside 64 bits.
inline constexpr std::uint64_t kMaxLength = 2'000'000'000ULL;

// Raised for inputs outside the supported range (n < 2, n > kMaxLength, or
// a tool-specific cap). The CLI maps this to exit status 3.
class GuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A solution of length n: the non-increasing entries >= 2 followed by
// n - k implicit ones.
struct Solution {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> nontrivial;

  std::uint64_t ones() const { return n - nontrivial.size(); }

  auto operator<=>(const Solution&) const = default;
  bool operator==(const Solution&) const = default;
};

// Descending length, then descending lexicographic prefix.
inline bool canonical_less(const Solution& a, const Solution& b) {
  if (a.n != b.n) return a.n > b.n;
  return a.nontrivial > b.nontrivial;
}

std::string to_string(const Solution& s);

}  // namespace productsum
