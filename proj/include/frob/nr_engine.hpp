#pragma once

#include <vector>

#include <json.hpp>

#include "frob/numeric.hpp"
#include "frob/stat_bundle.hpp"
#include "frob/tuple.hpp"

namespace frob {

// values[r] = smallest integer congruent to r mod `modulus` that is a
// nonnegative combination of the remaining generators.
struct NrTable {
  Int modulus;
  std::vector<Int> values;

  Int max_value() const;
};

// Shortest paths on the residue graph mod a_1 (edges r -> r + a_i).
NrTable compute_nr(const Tuple& A);
// Same, reducing modulo min(A) instead of the first element.
NrTable compute_nr_min_modulus(const Tuple& A);

// g, n, s, s_mu (1..max_mu) and shat_mu from the table; every division is checked exact.
StatBundle stats_from_nr(const NrTable& T, unsigned max_mu);

// values'[r] = values[d*r mod a]. The multiset of values is unchanged.
NrTable residue_permute(const NrTable& T, const Int& d);

nlohmann::json to_json(const NrTable& T);
NrTable nr_table_from_json(const nlohmann::json& j);

// The Bernoulli-weighted aggregation of sum_{r} N_r^p into s_mu; P[p] = sum N_r^p
// (P[0] is not used), p up to mu+1.
Int s_mu_from_power_sums(const Int& a, const std::vector<Int>& P, unsigned mu);

// Sum of v^p over the values for p = 0..max_p.
std::vector<Int> power_sums(const std::vector<Int>& values, unsigned max_p);

}  // namespace frob
