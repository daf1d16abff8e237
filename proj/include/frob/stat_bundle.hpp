#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frob/numeric.hpp"

namespace frob {

// g, n, s and the higher statistics, tagged with the engine that produced them.
// Any field may be absent: engines fill what they can.
struct StatBundle {
  std::vector<Int> tuple;
  std::optional<Int> g, n, s;
  std::map<unsigned, Int> s_mu;     // sum of gap^mu
  std::map<unsigned, Int> shat_mu;  // sum of C(gap, mu)
  std::map<Rational, std::map<unsigned, Rational>> s_mu_lambda;  // lambda -> mu -> sum lambda^gap gap^mu
  std::string engine;
  std::vector<std::string> notes;
};

// Fields present in both bundles that differ, one line each; empty when they agree.
std::vector<std::string> compare_bundles(const StatBundle& lhs, const StatBundle& rhs);

nlohmann::json to_json(const StatBundle& b);
StatBundle stat_bundle_from_json(const nlohmann::json& j);

// Integers go out as JSON numbers when they fit, as decimal strings otherwise.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace frob
