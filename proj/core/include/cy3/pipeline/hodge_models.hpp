#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cy3/hodge/diamond.hpp"
#include "cy3/hodge/numbers.hpp"
#include "cy3/hodge/spaces.hpp"

namespace cy3::pipeline {

struct HodgeModelReport {
  std::string name;
  std::string status;  // e.g. "conjectural"; empty for the built-in models
  std::vector<int> weights;
  int degree = 0;
  std::optional<hodge::HodgeDiamond> ambient;          // Griffiths diamond of the variety
  std::optional<hodge::HochschildProfile> ambient_hh;  // its HKR profile
  hodge::Count strip = 0;
  hodge::HochschildProfile hh;  // profile of the category
  hodge::UnitProfile unit;
  int weight = 3;
  std::optional<hodge::HodgeDiamond> diamond;  // weight 3 only
  hodge::ValidationReport validation;
  std::map<std::pair<int, int>, std::size_t> space_dims;
  std::vector<std::string> assignment_violations;
  std::string failed_clause;  // first failing clause; empty on success

  bool ok() const { return failed_clause.empty(); }
};

// Strip counts per model: cubic7 6, dqf5 4, cubic4 3.
const std::vector<std::string>& hodge_model_names();

// cubic7 / dqf5: griffiths -> hkr -> strip -> cy3_hodge_numbers -> validate,
// plus the weight-3 space assignment. cubic4: griffiths -> hkr -> strip ->
// weight2_assignment. Throws std::invalid_argument for an unknown name;
// clause failures are recorded, not thrown.
HodgeModelReport run_hodge_model(const std::string& name);

// Custom model document, either
//   {"hypersurface": {"weights": [...], "degree": d}, "strip": k, ...}
// or {"profile": {"n": 3, "dims": {"-3": 1, ...}}, ...}, with optional
// "name", "status", "unit" ({"0": 1, "3": 1}) and "weight" (2 or 3).
// Throws std::invalid_argument on a malformed document.
HodgeModelReport run_hodge_custom(const std::string& json_text);

std::string to_json(const HodgeModelReport& rep);

struct MirrorResult {
  hodge::HodgeDiamond rotated;
  bool match = false;
};

// Does the quarter turn of a equal b?
MirrorResult mirror_check(const hodge::HodgeDiamond& a, const hodge::HodgeDiamond& b);
std::string to_json(const MirrorResult& m, const std::string& name_a, const std::string& name_b);

}  // namespace cy3::pipeline
