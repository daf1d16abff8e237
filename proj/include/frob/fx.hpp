#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "frob/closed_forms.hpp"
#include "frob/nr_engine.hpp"
#include "frob/rational_terms.hpp"

namespace frob {

// f(x) = sum_r x^{N_r} as a single polynomial term.
RationalTermSum fx_from_table(const NrTable& T);

struct FxOptions {
  // The constructors for odd-steps/even-steps are stated only for d > h;
  // switch this off to build them anyway.
  bool appendix_guards = true;
};

// Closed rational form of f(x) for a family instance; geometric blocks stay
// unexpanded. Scale has no constructor (DomainError).
RationalTermSum fx_family(const FamilySpec& spec, const FxOptions& opts = {});

// The square family's double-sum form, expanded.
RationalTermSum fx_square_double_sum(const Int& a, const Int& h, const Int& d);

// Exact polynomial expansion over the common denominator. Throws DomainError if
// S is not a polynomial and ResourceError if the exponent span exceeds max_span.
std::map<Int, Int> expand_to_polynomial(const RationalTermSum& S, std::size_t max_span = 50'000'000);

struct EquivalenceVerdict {
  bool equal = false;
  std::optional<Int> mismatch_exponent;  // smallest exponent where the counts differ
  Int got = 0, want = 0;                 // coefficient there vs number of N_r equal to it
  std::string message;
};

EquivalenceVerdict fx_equivalence_check(const RationalTermSum& S, const NrTable& T,
                                        std::size_t max_span = 50'000'000);

}  // namespace frob
