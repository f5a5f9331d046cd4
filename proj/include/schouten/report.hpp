#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace schouten {

/// One verification record. `pass` is always recomputable from computed,
/// reference and tolerance via the stated comparison.
struct Report {
  std::string claim_id;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json computed = nlohmann::json::object();
  nlohmann::json reference = nlohmann::json::object();
  double tolerance = 0.0;
  std::string comparison;  // e.g. "max_abs_error<=tol", "exact"
  bool pass = false;
  long long runtime_ms = 0;
};

inline nlohmann::json to_json(const Report& r) {
  return nlohmann::json{{"claim_id", r.claim_id}, {"inputs", r.inputs},
                        {"computed", r.computed}, {"reference", r.reference},
                        {"tolerance", r.tolerance}, {"comparison", r.comparison},
                        {"pass", r.pass},         {"runtime_ms", r.runtime_ms}};
}

inline nlohmann::json to_json(const std::vector<Report>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : rs) arr.push_back(to_json(r));
  return arr;
}

}  // namespace schouten
