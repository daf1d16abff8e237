#pragma once

#include <vector>

#include "frob/numeric.hpp"
#include "frob/rational_terms.hpp"
#include "frob/series.hpp"
#include "frob/stat_bundle.hpp"

namespace frob {

// Number of factors 1 - x^b of T that vanish at x = point (point^b = 1).
std::size_t pole_order(const RationalTerm& T, const Rational& point);

// Laurent expansion of T(point * e^t) in t, exact through t^highest.
TruncatedSeries expand_term(const RationalTerm& T, const Rational& point, int highest);
// Sum of the term expansions, leading zeros removed.
TruncatedSeries expand_sum(const RationalTermSum& S, const Rational& point, int highest);

// CT_t T(e^t), truncating every factor at order (#factors + extra_order).
Rational ct_term(const RationalTerm& T, unsigned extra_order = 0);

// S(1) as a sum of constant terms; throws InternalError ("sum has a pole at 1")
// if the negative powers of t do not cancel.
Rational value_at_one(const RationalTermSum& S);
// S(point), same pole check; point may be any nonzero rational.
Rational value_at(const RationalTermSum& S, const Rational& point);

// n, s, s_mu, shat_mu (mu <= max_mu) and weighted sums from f(x) = sum x^{N_r}.
// g is not produced. lambda must avoid 0 and 1.
StatBundle stats_via_ct(const RationalTermSum& f, const Int& a, unsigned max_mu,
                        const std::vector<Rational>& lambdas = {});

}  // namespace frob
