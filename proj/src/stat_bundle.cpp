#include "frob/stat_bundle.hpp"

#include "frob/errors.hpp"

namespace frob {

namespace {

template <class K, class V, class Fmt>
void compare_maps(const std::map<K, V>& l, const std::map<K, V>& r, const std::string& label, Fmt key_str,
                  std::vector<std::string>& out) {
  for (const auto& [k, v] : l) {
    auto it = r.find(k);
    if (it != r.end() && it->second != v)
      out.push_back(label + "[" + key_str(k) + "]: " + to_string(v) + " vs " + to_string(it->second));
  }
}

void compare_opt(const std::optional<Int>& l, const std::optional<Int>& r, const char* label,
                 std::vector<std::string>& out) {
  if (l && r && *l != *r) out.push_back(std::string(label) + ": " + to_string(*l) + " vs " + to_string(*r));
}

std::string mu_str(unsigned mu) { return std::to_string(mu); }

}  // namespace

std::vector<std::string> compare_bundles(const StatBundle& lhs, const StatBundle& rhs) {
  std::vector<std::string> out;
  compare_opt(lhs.g, rhs.g, "g", out);
  compare_opt(lhs.n, rhs.n, "n", out);
  compare_opt(lhs.s, rhs.s, "s", out);
  compare_maps(lhs.s_mu, rhs.s_mu, "s_mu", mu_str, out);
  compare_maps(lhs.shat_mu, rhs.shat_mu, "shat_mu", mu_str, out);
  for (const auto& [lam, m] : lhs.s_mu_lambda) {
    auto it = rhs.s_mu_lambda.find(lam);
    if (it == rhs.s_mu_lambda.end()) continue;
    compare_maps(m, it->second, "s_mu_lambda(" + to_string(lam) + ")", mu_str, out);
  }
  return out;
}

nlohmann::json int_to_json(const Int& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw DomainError("expected an integer in JSON, got " + j.dump());
}

nlohmann::json to_json(const StatBundle& b) {
  nlohmann::json j;
  j["tuple"] = nlohmann::json::array();
  for (const auto& e : b.tuple) j["tuple"].push_back(int_to_json(e));
  auto opt = [](const std::optional<Int>& v) { return v ? int_to_json(*v) : nlohmann::json(nullptr); };
  j["g"] = opt(b.g);
  j["n"] = opt(b.n);
  j["s"] = opt(b.s);
  j["s_mu"] = nlohmann::json::object();
  for (const auto& [mu, v] : b.s_mu) j["s_mu"][std::to_string(mu)] = int_to_json(v);
  j["shat_mu"] = nlohmann::json::object();
  for (const auto& [mu, v] : b.shat_mu) j["shat_mu"][std::to_string(mu)] = int_to_json(v);
  j["s_mu_lambda"] = nlohmann::json::object();
  for (const auto& [lam, m] : b.s_mu_lambda) {
    auto& slot = j["s_mu_lambda"][to_string(lam)];
    slot = nlohmann::json::object();
    for (const auto& [mu, v] : m) slot[std::to_string(mu)] = to_string(v);
  }
  j["engine"] = b.engine;
  if (!b.notes.empty()) j["notes"] = b.notes;
  return j;
}

StatBundle stat_bundle_from_json(const nlohmann::json& j) {
  StatBundle b;
  for (const auto& e : j.at("tuple")) b.tuple.push_back(int_from_json(e));
  auto opt = [&](const char* key) -> std::optional<Int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return int_from_json(j.at(key));
  };
  b.g = opt("g");
  b.n = opt("n");
  b.s = opt("s");
  auto mu_map = [&](const char* key, std::map<unsigned, Int>& out) {
    if (!j.contains(key)) return;
    for (const auto& [k, v] : j.at(key).items()) out[static_cast<unsigned>(std::stoul(k))] = int_from_json(v);
  };
  mu_map("s_mu", b.s_mu);
  mu_map("shat_mu", b.shat_mu);
  if (j.contains("s_mu_lambda")) {
    for (const auto& [lam, m] : j.at("s_mu_lambda").items()) {
      auto& slot = b.s_mu_lambda[parse_rational(lam)];
      for (const auto& [k, v] : m.items())
        slot[static_cast<unsigned>(std::stoul(k))] =
            v.is_string() ? parse_rational(v.get<std::string>()) : Rational(int_from_json(v));
    }
  }
  b.engine = j.value("engine", "");
  if (j.contains("notes")) b.notes = j.at("notes").get<std::vector<std::string>>();
  return b;
}

}  // namespace frob
