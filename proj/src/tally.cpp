#include "productsum/tally.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace productsum {

SolutionTally::SolutionTally(std::uint64_t upper) : upper_(upper) {
  if (dense()) dense_.assign(upper + 1, 0);
}

void SolutionTally::add(std::uint64_t length, std::uint64_t count) {
  if (length < 2 || length > upper_) {
    throw std::out_of_range("tally length " + std::to_string(length) + " outside [2, " +
                            std::to_string(upper_) + "]");
  }
  if (dense()) {
    dense_[length] += count;
  } else {
    sparse_[length] += count;
  }
}

std::uint64_t SolutionTally::count(std::uint64_t length) const {
  if (length > upper_) return 0;
  if (dense()) return dense_[length];
  auto it = sparse_.find(length);
  return it == sparse_.end() ? 0 : it->second;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SolutionTally::entries() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (dense()) {
    for (std::uint64_t len = 2; len <= upper_; ++len) {
      if (dense_[len]) out.emplace_back(len, dense_[len]);
    }
  } else {
    out.assign(sparse_.begin(), sparse_.end());
  }
  return out;
}

std::uint64_t SolutionTally::total() const {
  if (dense()) return std::accumulate(dense_.begin(), dense_.end(), std::uint64_t{0});
  std::uint64_t t = 0;
  for (const auto& [len, c] : sparse_) t += c;
  return t;
}

SolutionTally& SolutionTally::merge(const SolutionTally& other) {
  if (other.upper_ != upper_) throw std::invalid_argument("cannot merge tallies with different upper bounds");
  if (dense()) {
    for (std::size_t len = 0; len < dense_.size(); ++len) dense_[len] += other.dense_[len];
  } else {
    for (const auto& [len, c] : other.sparse_) sparse_[len] += c;
  }
  return *this;
}

bool SolutionTally::operator==(const SolutionTally& other) const {
  return upper_ == other.upper_ && entries() == other.entries();
}

}  // namespace productsum
