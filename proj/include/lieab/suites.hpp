#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieab/hermitian.hpp"
#include "lieab/sphericity.hpp"

namespace lieab {

struct SweepConfig {
  int max_rank = 4;
  std::vector<std::string> types;  // series letters ("D") or types ("D4"); empty = all
  int level_bound = 3;
  int jobs = 0;  // 0 = OpenMP default, 1 = serial
};

// InvalidArgument on max_rank < 1 or a malformed type filter
void validate(const SweepConfig& cfg);

// m = 2 gradings of every (g, k) passing the filter, then the flips k + k with 2 rank k <= max_rank
std::vector<GradingDatum> sweep_gradings(const SweepConfig& cfg);
// finite types passing the filter, rank <= max_rank, B2 = C2 and D3 = A3 counted once
std::vector<FiniteType> sweep_types(const SweepConfig& cfg);
std::vector<std::pair<FiniteType, int>> hermitian_pairs(const SweepConfig& cfg);

struct SuiteReport {
  std::string id;
  bool ok = true;
  long checked = 0;  // number of objects checked
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
};

const std::vector<std::string>& suite_ids();
// "73" -> "cor73", "MT" -> "mt", ...; nullopt for unknown ids
std::optional<std::string> canonical_suite(const std::string& id);
// throws InvalidArgument on unknown id
SuiteReport run_suite(const std::string& id, const SweepConfig& cfg);

std::string roots_str(const GradedRoots& gr, const RootSet& s);

nlohmann::json atlas_json(const SweepConfig& cfg);
nlohmann::json classify_json(const SweepConfig& cfg);
nlohmann::json orbits_json(const GradingDatum& g, int subalgebra, int level_bound = 3);
// q is 0-based
nlohmann::json hermitian_json(const FiniteType& t, int q, bool all_ort, bool antichains);

}  // namespace lieab
