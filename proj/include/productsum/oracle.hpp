#pragma once

// Reference routines that check the enumerator without sharing its pruning
// rule: a brute-force search bounded only by a_i <= n and product <= 2n, a
// direct solution check, and closed-form constructions of known solutions.

#include <cstdint>
#include <utility>
#include <vector>

#include "productsum/solution.hpp"

namespace productsum::oracle {

inline constexpr std::uint64_t kOracleMaxLength = 10'000;

struct PrimalityResult {
  std::uint64_t n = 0;
  bool is_prime = false;
};

PrimalityResult primality(std::uint64_t n);
bool is_prime(std::uint64_t n);

// True iff n - 1 and 2n - 1 are both prime.
bool is_sophie_germain_shifted(std::uint64_t n);

// Entries non-increasing and >= 2, 2 <= k <= n.
bool is_well_formed(const Solution& sol);

// product(nontrivial) == sum(nontrivial) + (n - k). Returns false for
// malformed input and for products above 2n (checked incrementally, so no
// overflow).
bool verify_solution(const Solution& sol);

// All solutions of length n in canonical order. Throws GuardError unless
// 2 <= n <= kOracleMaxLength.
std::vector<Solution> oracle_enumerate(std::uint64_t n);

Solution basic_solution(std::uint64_t n);

// Solution ((a+1)/2, (b+1)/2, 2) built from a factorization 2n - 1 = a*b,
// a >= b >= 3. Throws std::invalid_argument otherwise.
Solution reble_factor_solution(std::uint64_t n, std::uint64_t a, std::uint64_t b);

// Solution (2j+1, 2, 2, 2, 2) of length 30j + 12; the factor 1 is dropped
// when j = 0.
Solution reble_mod12_solution(std::uint64_t j);

// Every factorization 2n - 1 = a*b with a >= b >= 3, by trial division.
std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_factor_pairs(std::uint64_t n);

}  // namespace productsum::oracle
