#include "productsum/io.hpp"

#include <ostream>

#include <json.hpp>

namespace productsum::io {

using ordered_json = nlohmann::ordered_json;

std::string solution_jsonl(std::uint64_t n, std::span<const std::uint64_t> prefix) {
  ordered_json j;
  j["n"] = n;
  j["prefix"] = std::vector<std::uint64_t>(prefix.begin(), prefix.end());
  j["ones"] = n - prefix.size();
  return j.dump();
}

std::string solution_jsonl(const Solution& sol) { return solution_jsonl(sol.n, sol.nontrivial); }

Solution parse_solution_jsonl(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object");
  for (const char* key : {"n", "prefix", "ones"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  }
  if (!j["n"].is_number_unsigned() || !j["ones"].is_number_unsigned()) {
    throw ParseError("\"n\" and \"ones\" must be non-negative integers");
  }
  if (!j["prefix"].is_array()) throw ParseError("\"prefix\" must be an array");
  Solution sol;
  sol.n = j["n"].get<std::uint64_t>();
  for (const auto& v : j["prefix"]) {
    if (!v.is_number_unsigned()) throw ParseError("prefix entries must be non-negative integers");
    sol.nontrivial.push_back(v.get<std::uint64_t>());
  }
  const auto ones = j["ones"].get<std::uint64_t>();
  if (sol.nontrivial.size() > sol.n || ones != sol.n - sol.nontrivial.size()) {
    throw ParseError("\"ones\" does not equal n - |prefix|");
  }
  return sol;
}

void write_tally_csv(std::ostream& os, const SolutionTally& tally) {
  os << "n,count\n";
  for (const auto& [len, count] : tally.entries()) os << len << ',' << count << '\n';
}

std::string exceptional_jsonl(const ExceptionalEntry& entry) {
  ordered_json j;
  j["n"] = entry.n;
  j["sophie_germain"] = entry.sophie_germain;
  j["mod30"] = entry.mod30;
  return j.dump();
}

std::string_view variant_name(Variant v) {
  return v == Variant::Precheck2n ? "precheck2n" : "feasibility";
}

std::string run_report_json(const RunReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["variant"] = variant_name(r.variant);
  j["workers"] = r.workers;
  j["theta"] = r.stats.theta;
  j["calls"] = r.stats.calls;
  j["prunes_feasibility"] = r.stats.prunes_feasibility;
  j["prunes_precheck2n"] = r.stats.prunes_precheck2n;
  j["records"] = r.stats.records;
  j["extends"] = r.stats.extends();
  j["max_depth"] = r.stats.max_depth;
  j["harvested"] = r.stats.harvested;
  j["solutions"] = r.solutions;
  j["wall_seconds"] = r.wall_seconds;
  j["ratio"] = r.ratio ? ordered_json(*r.ratio) : ordered_json(nullptr);
  return j.dump();
}

}  // namespace productsum::io
