#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "productsum/enumerator.hpp"
#include "productsum/harvest.hpp"
#include "productsum/tally.hpp"

namespace productsum::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n":5,"prefix":[2,2,2],"ones":2}
std::string solution_jsonl(std::uint64_t n, std::span<const std::uint64_t> prefix);
std::string solution_jsonl(const Solution& sol);

// Parses one JSONL record. Throws ParseError on malformed JSON, missing or
// mistyped fields, or a "ones" value that disagrees with n - |prefix|.
Solution parse_solution_jsonl(std::string_view line);

// Header "n,count", one row per non-zero length, ascending.
void write_tally_csv(std::ostream& os, const SolutionTally& tally);

// {"n":24,"sophie_germain":true,"mod30":24}
std::string exceptional_jsonl(const ExceptionalEntry& entry);

std::string_view variant_name(Variant v);

struct RunReport {
  std::uint64_t n = 0;
  Variant variant = Variant::FeasibilityOnly;
  int workers = 1;
  SearchStats stats;
  std::uint64_t solutions = 0;
  double wall_seconds = 0.0;
  std::optional<double> ratio;  // theta / A(n); absent for n < 3
};

std::string run_report_json(const RunReport& report);

}  // namespace productsum::io
