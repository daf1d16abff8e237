#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/numeric.hpp"

namespace frob {

// O_B(M) = min sum x_i subject to sum b_i x_i = M, x_i >= 0.
// Unsigned mode: b strictly increasing, b_i >= 1, M >= 0.
// Signed mode: only B = (-1, 1), M any integer.
struct ObProblem {
  std::vector<Int> weights;
  bool is_signed = false;
};

struct ObSolution {
  std::optional<Int> value;  // empty = infeasible
  std::vector<Int> witness;

  bool feasible() const { return value.has_value(); }
};

void validate(const ObProblem& P);

// Unbounded-knapsack DP over 0..M with parent reconstruction.
ObSolution ob_general(const ObProblem& P, const Int& M);

// O_B(M) for every M in [0, max_M]; -1 marks infeasible.
std::vector<std::int64_t> ob_values(const ObProblem& P, std::int64_t max_M);

enum class ObFamily {
  OneJ,          // (1, j)
  OneTwoJ,       // (1, 2, j)
  OneAAPlusOne,  // (1, a, a+1)
  Prefix,        // (1, 2, ..., k)
  Truncated,     // (K+1, ..., k)
  OddSteps,      // (1, 3, ..., 2k+1)
  EvenSteps,     // (1, 2, 4, ..., 2k)
  PlusMinus,     // (-1, 1), signed
};

struct ObFamilyParams {
  ObFamily family;
  Int j = 0, a = 0, k = 0, K = 0;
};

std::string to_string(ObFamily f);
ObProblem ob_problem(const ObFamilyParams& F);
ObSolution ob_closed_form(const ObFamilyParams& F, const Int& M);

struct NdrResult {
  Int value;
  Int argmin_m;
  // Unsigned: N_dr(m) non-decreasing over the feasible scanned m.
  // Signed: non-decreasing moving away from the argmin on both sides.
  bool monotone = true;
};

std::int64_t default_m_cap(const Int& a, const ObProblem& B);

// min over m of ha*O_B(ma+r) + (ma+r)d, m in [0, m_cap] (signed: [-m_cap, m_cap]).
NdrResult ndr_via_reduction(const Int& a, const Int& h, const Int& d, const ObProblem& B, const Int& r,
                            std::optional<std::int64_t> m_cap = std::nullopt);

}  // namespace frob
