#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frob/numeric.hpp"
#include "frob/stat_bundle.hpp"
#include "frob/tuple.hpp"

namespace frob {

enum class FamilyTag { Scale, Aj, A2j, Square, Pm, Arith, TruncArith, OddSteps, EvenSteps };

struct FamilySpec {
  FamilyTag tag;
  std::map<std::string, Int> params;

  const Int& at(const std::string& name) const;
  std::string str() const;  // "aj a=10 h=1 d=1 j=3"
};

struct FamilyInfo {
  FamilyTag tag;
  std::string name;
  std::vector<std::string> params;  // schema, in grid order
  std::string generators;
  std::string provides;  // which statistics the closed form gives
  bool has_fx;
};

const std::vector<FamilyInfo>& family_registry();
const FamilyInfo& family_info(FamilyTag tag);
FamilyTag parse_family(std::string_view name);  // throws DomainError for unknown names
std::string_view family_name(FamilyTag tag);

// Checks the family's hypotheses (PreconditionError naming the failed one) and
// returns the induced tuple.
Tuple family_tuple(const FamilySpec& spec);

// Closed-form statistics; s_mu only for families with an explicit s_mu formula.
StatBundle evaluate_family(const FamilySpec& spec, unsigned max_mu = 0);

// d*g(a,B) + (d-1)*a, with g(a,B) from the residue table.
Int scale_g(const Int& a, const Int& d, const std::vector<Int>& B);

StatBundle family_aj(const Int& a, const Int& h, const Int& d, const Int& j);
StatBundle family_a2j(const Int& a, const Int& h, const Int& d, const Int& j);
StatBundle family_square(const Int& a, const Int& h, const Int& d);
StatBundle family_pm(const Int& a, const Int& h, const Int& d, unsigned max_mu = 0);
StatBundle family_arith(const Int& a, const Int& h, const Int& d, const Int& k, unsigned max_mu = 0);
StatBundle family_trunc_arith(const Int& a, const Int& h, const Int& d, const Int& K, const Int& k);
StatBundle family_odd_steps(const Int& a, const Int& h, const Int& d, const Int& k);
StatBundle family_even_steps(const Int& a, const Int& h, const Int& d, const Int& k);

// g(sa, sa+1, sa+a) = as(a+s-2) - 1.
Int g_sa_family(const Int& a, const Int& s);
// g(a, a+1, a+2, a+j) for j in {4, 5, 6} as sums of floors.
Int g_unit_a2j(const Int& a, int j);

// sum_{r=0}^{n-1} r^p via Bernoulli numbers.
Int power_sum_below(const Int& n, unsigned p);

}  // namespace frob
