#include "productsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace productsum::oracle {

PrimalityResult primality(std::uint64_t n) {
  PrimalityResult r{n, false};
  if (n < 2) return r;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return r;
  }
  r.is_prime = true;
  return r;
}

bool is_prime(std::uint64_t n) { return primality(n).is_prime; }

bool is_sophie_germain_shifted(std::uint64_t n) {
  return n >= 2 && is_prime(n - 1) && is_prime(2 * n - 1);
}

bool is_well_formed(const Solution& sol) {
  const auto& v = sol.nontrivial;
  if (v.size() < 2 || v.size() > sol.n) return false;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < 2) return false;
    if (j > 0 && v[j] > v[j - 1]) return false;
  }
  return true;
}

bool verify_solution(const Solution& sol) {
  if (!is_well_formed(sol)) return false;
  const std::uint64_t cap = 2 * sol.n;
  std::uint64_t product = 1;
  std::uint64_t sum = 0;
  for (std::uint64_t a : sol.nontrivial) {
    if (a > cap || product > cap / a) return false;
    product *= a;
    sum += a;
  }
  return product == sum + (sol.n - sol.nontrivial.size());
}

namespace {

// Plain exhaustive walk over non-increasing prefixes; the only cuts are the
// entry bound a <= n and the product bound p <= 2n.
void walk(std::uint64_t n, std::vector<std::uint64_t>& prefix, std::uint64_t product,
          std::vector<Solution>& out) {
  if (prefix.size() >= 2) {
    Solution candidate{n, prefix};
    if (verify_solution(candidate)) out.push_back(std::move(candidate));
  }
  if (prefix.size() == n) return;
  const std::uint64_t top = prefix.empty() ? n : prefix.back();
  for (std::uint64_t a = 2; a <= top; ++a) {
    if (product * a > 2 * n) break;
    prefix.push_back(a);
    walk(n, prefix, product * a, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Solution> oracle_enumerate(std::uint64_t n) {
  if (n < 2 || n > kOracleMaxLength) {
    throw GuardError("oracle length must lie in [2, " + std::to_string(kOracleMaxLength) +
                     "], got " + std::to_string(n));
  }
  std::vector<Solution> out;
  std::vector<std::uint64_t> prefix;
  walk(n, prefix, 1, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Solution basic_solution(std::uint64_t n) {
  if (n < 2) throw GuardError("basic solution needs n >= 2");
  return Solution{n, {n, 2}};
}

Solution reble_factor_solution(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  if (n < 3) throw std::invalid_argument("reble_factor_solution needs n >= 3");
  if (b < 3 || a < b) throw std::invalid_argument("factors must satisfy a >= b >= 3");
  if (a * b != 2 * n - 1) {
    throw std::invalid_argument(std::to_string(a) + "*" + std::to_string(b) +
                                " != 2n-1 = " + std::to_string(2 * n - 1));
  }
  return Solution{n, {(a + 1) / 2, (b + 1) / 2, 2}};
}

Solution reble_mod12_solution(std::uint64_t j) {
  Solution sol{30 * j + 12, {}};
  if (j > 0) sol.nontrivial.push_back(2 * j + 1);
  sol.nontrivial.insert(sol.nontrivial.end(), {2, 2, 2, 2});
  return sol;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_factor_pairs(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  const std::uint64_t m = 2 * n - 1;
  for (std::uint64_t b = 3; b * b <= m; b += 2) {
    if (m % b == 0) pairs.emplace_back(m / b, b);
  }
  return pairs;
}

}  // namespace productsum::oracle
