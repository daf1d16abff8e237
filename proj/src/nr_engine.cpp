#include "frob/nr_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

#include "frob/errors.hpp"

namespace frob {

namespace {

constexpr long kMaxModulus = 1L << 31;

template <class Dist>
std::vector<Dist> dijkstra(std::size_t a, const std::vector<std::size_t>& step, const std::vector<Dist>& weight,
                           const Dist& unreached) {
  std::vector<Dist> dist(a, unreached);
  using Item = std::pair<Dist, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[0] = 0;
  pq.emplace(Dist(0), 0);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du != dist[u]) continue;
    for (std::size_t i = 0; i < step.size(); ++i) {
      std::size_t v = u + step[i];
      if (v >= a) v -= a;
      Dist nd = du + weight[i];
      if (dist[v] == unreached || nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

Int NrTable::max_value() const { return *std::max_element(values.begin(), values.end()); }

NrTable compute_nr(const Tuple& A) {
  const Int& a = A.modulus();
  if (a > kMaxModulus) throw ResourceError("modulus " + to_string(a) + " is too large for the residue table");
  const auto size = static_cast<std::size_t>(a.get_si());

  // Parallel edges with the same residue: only the lightest matters.
  std::vector<Int> best(size);
  std::vector<bool> seen(size, false);
  Int max_b = 0;
  for (std::size_t i = 1; i < A.size(); ++i) {
    const auto r = static_cast<std::size_t>(mod_floor(A[i], a).get_si());
    if (!seen[r] || A[i] < best[r]) best[r] = A[i];
    seen[r] = true;
  }
  std::vector<std::size_t> step;
  std::vector<Int> weight;
  for (std::size_t r = 1; r < size; ++r)
    if (seen[r]) {
      step.push_back(r);
      weight.push_back(best[r]);
      max_b = std::max(max_b, best[r]);
    }

  NrTable T{a, {}};
  // Shortest paths use at most a-1 edges.
  if ((a - 1) * max_b < (Int(1) << 62)) {
    std::vector<std::int64_t> w;
    for (const auto& x : weight) w.push_back(x.get_si());
    auto dist = dijkstra<std::int64_t>(size, step, w, -1);
    T.values.reserve(size);
    for (auto d : dist) T.values.emplace_back(static_cast<long>(d));
  } else {
    T.values = dijkstra<Int>(size, step, weight, Int(-1));
  }
  return T;
}

NrTable compute_nr_min_modulus(const Tuple& A) { return compute_nr(A.with_min_first()); }

std::vector<Int> power_sums(const std::vector<Int>& values, unsigned max_p) {
  std::vector<Int> acc(max_p + 1, Int(0));
  Int pw;
  for (const auto& v : values) {
    pw = 1;
    for (unsigned p = 0; p <= max_p; ++p) {
      acc[p] += pw;
      pw *= v;
    }
  }
  return acc;
}

Int s_mu_from_power_sums(const Int& a, const std::vector<Int>& P, unsigned mu) {
  const Rational ar(a);
  Rational sum = 0;
  for (unsigned k = 0; k <= mu; ++k) {
    Rational apow = k == 0 ? Rational(1) / ar : Rational(ipow(a, k - 1));
    sum += binomial(Int(mu + 1), k) * bernoulli(k) * apow * P.at(mu + 1 - k);
  }
  sum += bernoulli(mu + 1) * (ipow(a, mu + 1) - 1);
  sum /= Rational(Int(mu + 1));
  return exact_integer(sum, "s_mu from power sums");
}

StatBundle stats_from_nr(const NrTable& T, unsigned max_mu) {
  const Int& a = T.modulus;
  const Rational ar(a);
  const unsigned top = std::max(2u, max_mu + 1);
  const auto P = power_sums(T.values, top);

  StatBundle b;
  b.engine = "nr";
  b.g = T.max_value() - a;
  b.n = exact_integer(Rational(P[1]) / ar - make_rational(a - 1, 2), "n from N_r");
  b.s = exact_integer(Rational(P[2]) / (2 * ar) - make_rational(P[1], 2) + make_rational(a * a - 1, 12), "s from N_r");

  for (unsigned mu = 1; mu <= max_mu; ++mu) b.s_mu[mu] = s_mu_from_power_sums(a, P, mu);
  for (unsigned mu = 1; mu <= max_mu; ++mu) {
    Int acc = 0;
    for (unsigned k = 1; k <= mu; ++k) acc += stirling1(mu, k) * b.s_mu[k];
    b.shat_mu[mu] = exact_integer(Rational(acc) / Rational(factorial(mu)), "binomial moment");
  }
  return b;
}

NrTable residue_permute(const NrTable& T, const Int& d) {
  if (gcd(d, T.modulus) != 1) throw DomainError("residue_permute: d must be coprime to the modulus");
  const auto a = T.values.size();
  const auto dd = static_cast<std::size_t>(mod_floor(d, T.modulus).get_ui());
  NrTable out{T.modulus, std::vector<Int>(a)};
  for (std::size_t r = 0; r < a; ++r) out.values[r] = T.values[(dd * r) % a];
  return out;
}

nlohmann::json to_json(const NrTable& T) {
  nlohmann::json j;
  j["modulus"] = int_to_json(T.modulus);
  j["values"] = nlohmann::json::array();
  for (const auto& v : T.values) j["values"].push_back(int_to_json(v));
  return j;
}

NrTable nr_table_from_json(const nlohmann::json& j) {
  NrTable T;
  T.modulus = int_from_json(j.at("modulus"));
  for (const auto& v : j.at("values")) T.values.push_back(int_from_json(v));
  if (T.modulus < 1 || Int(static_cast<unsigned long>(T.values.size())) != T.modulus)
    throw DomainError("NrTable JSON: values must have length modulus");
  return T;
}

}  // namespace frob
