#include "cy3/pipeline/hodge_models.hpp"

#include <json.hpp>
#include <stdexcept>

namespace cy3::pipeline {

namespace {

using nlohmann::json;
using namespace cy3::hodge;

struct ModelSpec {
  std::vector<int> weights;
  int degree;
  Count strip;
  int weight;
};

const std::map<std::string, ModelSpec>& models() {
  // Exceptional collections O, O(1), ...: six on the cubic sevenfold, four
  // on the double quartic fivefold, three on the cubic fourfold.
  static const std::map<std::string, ModelSpec> m{
      {"cubic7", {std::vector<int>(9, 1), 3, 6, 3}},
      {"dqf5", {{1, 1, 1, 1, 1, 1, 2}, 4, 4, 3}},
      {"cubic4", {std::vector<int>(6, 1), 3, 3, 2}},
  };
  return m;
}

UnitProfile unit_for_weight(int weight) {
  UnitProfile u;
  u.graded_dims = {{0, 1}, {weight, 1}};
  return u;
}

bool is_c_plus_c3(const UnitProfile& u) {
  for (const auto& [j, v] : u.graded_dims) {
    if (v != ((j == 0 || j == 3) ? 1 : 0)) return false;
  }
  return u[3] == 1;
}

void record_assignment(HodgeModelReport& rep, const HodgeSpaceAssignment& a) {
  for (const auto& s : a.spaces) rep.space_dims[{s.p, s.q}] = s.basis.size();
  rep.assignment_violations = check_assignment(a, rep.hh);
}

// Everything after the category's profile is known.
void finish(HodgeModelReport& rep) {
  try {
    if (rep.weight == 2) {
      record_assignment(rep, weight2_assignment(rep.hh));
    } else {
      rep.diamond = cy3_hodge_numbers(rep.hh, rep.unit);
      rep.validation = validate_cy3(*rep.diamond, rep.hh);
      for (const auto& i : rep.validation.issues) {
        if (i.guaranteed && rep.failed_clause.empty()) rep.failed_clause = i.clause;
      }
      if (rep.failed_clause.empty() && is_c_plus_c3(rep.unit)) {
        record_assignment(rep, weight3_assignment(rep.hh, rep.unit));
        for (const auto& [pq, dim] : rep.space_dims) {
          if (static_cast<Count>(dim) != (*rep.diamond)(pq.first, pq.second)) {
            rep.assignment_violations.push_back("dim H^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                                                "} differs from the diamond");
          }
        }
      }
    }
  } catch (const HodgeValidationError& e) {
    rep.failed_clause = e.clause();
    rep.validation.issues.push_back({e.clause(), e.what()});
    return;
  }
  if (rep.failed_clause.empty() && !rep.assignment_violations.empty()) rep.failed_clause = "assignment";
}

void from_hypersurface(HodgeModelReport& rep, const std::vector<int>& weights, int degree, Count strip) {
  rep.weights = weights;
  rep.degree = degree;
  rep.ambient = griffiths_hypersurface(weights, degree);
  rep.ambient_hh = hkr_profile(*rep.ambient);
  rep.strip = strip;
  try {
    rep.hh = sod_strip(*rep.ambient_hh, strip);
  } catch (const HodgeValidationError& e) {
    rep.failed_clause = e.clause();
    rep.validation.issues.push_back({e.clause(), e.what()});
    return;
  }
  finish(rep);
}

json grid_json(const HodgeDiamond& d) { return json::parse(to_json(d)); }
json profile_json(const HochschildProfile& hh) { return json::parse(to_json(hh)); }

}  // namespace

const std::vector<std::string>& hodge_model_names() {
  static const std::vector<std::string> names{"cubic7", "dqf5", "cubic4"};
  return names;
}

HodgeModelReport run_hodge_model(const std::string& name) {
  const auto it = models().find(name);
  if (it == models().end()) throw std::invalid_argument("unknown Hodge model '" + name + "'");
  const ModelSpec& s = it->second;
  HodgeModelReport rep;
  rep.name = name;
  rep.weight = s.weight;
  rep.unit = unit_for_weight(s.weight);
  from_hypersurface(rep, s.weights, s.degree, s.strip);
  return rep;
}

HodgeModelReport run_hodge_custom(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("custom model: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("custom model: expected a JSON object");

  HodgeModelReport rep;
  try {
    rep.name = j.value("name", std::string("custom"));
    rep.status = j.value("status", std::string());
    rep.weight = j.value("weight", 3);
    if (rep.weight != 2 && rep.weight != 3) throw std::invalid_argument("custom model: weight must be 2 or 3");
    rep.unit = unit_for_weight(rep.weight);
    if (j.contains("unit")) {
      rep.unit.graded_dims.clear();
      for (const auto& [k, v] : j.at("unit").items()) rep.unit.graded_dims[std::stoi(k)] = v.get<Count>();
    }
    const bool hyp = j.contains("hypersurface"), prof = j.contains("profile");
    if (hyp == prof) throw std::invalid_argument("custom model: give exactly one of \"hypersurface\" and \"profile\"");
    if (hyp) {
      const auto& h = j.at("hypersurface");
      from_hypersurface(rep, h.at("weights").get<std::vector<int>>(), h.at("degree").get<int>(), j.value("strip", Count{0}));
    } else {
      rep.hh = profile_from_json(j.at("profile").dump());
      finish(rep);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("custom model: ") + e.what());
  } catch (const HodgeValidationError&) {
    throw;
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("custom model: ") + e.what());
  }
  return rep;
}

std::string to_json(const HodgeModelReport& rep) {
  json j;
  j["schema"] = "cy3.hodge-report/1";
  j["model"] = rep.name;
  if (!rep.status.empty()) j["status"] = rep.status;
  if (rep.ambient) {
    j["variety"] = {{"weights", rep.weights},
                    {"degree", rep.degree},
                    {"diamond", grid_json(*rep.ambient)},
                    {"hochschild", profile_json(*rep.ambient_hh)},
                    {"exceptional_objects", rep.strip}};
  }
  j["hochschild"] = profile_json(rep.hh);
  json unit = json::object();
  for (const auto& [k, v] : rep.unit.graded_dims) unit[std::to_string(k)] = v;
  j["unit"] = unit;
  j["weight"] = rep.weight;
  if (rep.diamond) {
    j["diamond"] = grid_json(*rep.diamond);
    j["render"] = render(*rep.diamond);
  }
  json issues = json::array();
  for (const auto& i : rep.validation.issues) {
    issues.push_back({{"clause", i.clause}, {"message", i.message}, {"guaranteed", i.guaranteed}});
  }
  j["validation"] = {{"ok", rep.ok()}, {"issues", issues}};
  if (!rep.failed_clause.empty()) j["validation"]["failed_clause"] = rep.failed_clause;
  if (!rep.space_dims.empty()) {
    json dims = json::object();
    for (const auto& [pq, d] : rep.space_dims) dims[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    j["hodge_spaces"] = {{"dims", dims}, {"violations", rep.assignment_violations}};
  }
  return j.dump(2);
}

MirrorResult mirror_check(const HodgeDiamond& a, const HodgeDiamond& b) {
  MirrorResult m;
  m.rotated = rotate_diamond(a);
  m.match = m.rotated == b;
  return m;
}

std::string to_json(const MirrorResult& m, const std::string& name_a, const std::string& name_b) {
  json j;
  j["schema"] = "cy3.mirror-report/1";
  j["a"] = name_a;
  j["b"] = name_b;
  j["rotated"] = grid_json(m.rotated);
  j["render"] = render(m.rotated);
  j["match"] = m.match;
  return j.dump(2);
}

}  // namespace cy3::pipeline
