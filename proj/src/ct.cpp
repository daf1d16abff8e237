#include "frob/ct.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

namespace {

bool is_root_of_unity_power(const Rational& point, const Int& b) {
  if (point == 1) return true;
  return point == -1 && mod_floor(b, 2) == 0;
}

// sum_e c_e (point e^t)^e through t^order.
TruncatedSeries numerator_series(const LaurentPoly& L, const Rational& point, int order) {
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> acc(n);
  Int pw;
  for (const auto& [e, c] : L.terms()) {
    const Rational w = point == 1 ? c : Rational(c * rpow(point, require_int64(e, "exponent")));
    pw = 1;
    for (std::size_t k = 0; k < n; ++k) {
      acc[k] += w * pw;
      pw *= e;
    }
  }
  for (std::size_t k = 2; k < n; ++k) acc[k] /= Rational(factorial(k));
  return TruncatedSeries(0, std::move(acc));
}

// 1/(1 - c e^{bt}) with c != 1, through t^order.
TruncatedSeries unit_factor(const Int& b, const Rational& c, int order) {
  auto s = series_exp_scaled(b, static_cast<unsigned>(order)).scaled(-c);
  std::vector<Rational> coeffs = s.coefficients();
  coeffs[0] += 1;
  return TruncatedSeries(0, std::move(coeffs)).inverse();
}

std::size_t max_pole(const RationalTermSum& S, const Rational& point) {
  std::size_t m = 0;
  for (const auto& t : S.terms()) m = std::max(m, pole_order(t, point));
  return m;
}

Rational constant_term_checked(const TruncatedSeries& s, const Rational& point) {
  for (int e = s.offset(); e < 0; ++e)
    if (s.coefficient(e) != 0) throw InternalError("sum has a pole at " + to_string(point));
  return s.coefficient(0);
}

}  // namespace

std::size_t pole_order(const RationalTerm& T, const Rational& point) {
  return static_cast<std::size_t>(std::count_if(T.denominator.begin(), T.denominator.end(),
                                                [&](const Int& b) { return is_root_of_unity_power(point, b); }));
}

TruncatedSeries expand_term(const RationalTerm& T, const Rational& point, int highest) {
  if (point == 0) throw DomainError("cannot expand around x = 0");
  const int m = static_cast<int>(pole_order(T, point));
  const int order = highest + m;
  if (order < 0) return TruncatedSeries::zero(highest);
  TruncatedSeries prod = numerator_series(T.numerator, point, order);
  for (const auto& b : T.denominator) {
    if (is_root_of_unity_power(point, b)) {
      prod = prod * series_t_over_one_minus_exp(b, static_cast<unsigned>(order));
    } else {
      const Rational c = rpow(point, require_int64(b, "denominator exponent"));
      prod = prod * unit_factor(b, c, order);
    }
  }
  return prod.shifted(-m);
}

TruncatedSeries expand_sum(const RationalTermSum& S, const Rational& point, int highest) {
  TruncatedSeries total = TruncatedSeries::zero(highest);
  for (const auto& t : S.terms()) total = total + expand_term(t, point, highest);
  return total.normalized();
}

Rational ct_term(const RationalTerm& T, unsigned extra_order) {
  return expand_term(T, 1, static_cast<int>(extra_order)).coefficient(0);
}

Rational value_at(const RationalTermSum& S, const Rational& point) {
  TruncatedSeries total = TruncatedSeries::zero(0);
  for (const auto& t : S.terms()) total = total + expand_term(t, point, 0);
  return constant_term_checked(total, point);
}

Rational value_at_one(const RationalTermSum& S) { return value_at(S, 1); }

StatBundle stats_via_ct(const RationalTermSum& f, const Int& a, unsigned max_mu, const std::vector<Rational>& lambdas) {
  for (const auto& lam : lambdas)
    if (lam == 0 || lam == 1) throw DomainError("lambda must not be 0 or 1");
  if (value_at_one(f) != Rational(a))
    throw DomainError("f(1) = " + to_string(value_at_one(f)) + " differs from a = " + to_string(a));

  std::vector<RationalTermSum> D{RationalTermSum({RationalTerm(LaurentPoly::monomial(0), {a})})};
  for (unsigned i = 1; i <= max_mu; ++i) D.push_back(differentiate(D.back()));

  // f^{(i)}(point e^t), i <= top, through t^need. With theta = x d/dx = d/dt,
  // x^i f^{(i)} = sum_j s(i,j) theta^j f, so one expansion of f suffices.
  auto f_derivative_series = [&](const Rational& point, unsigned top, int need) {
    const int order = need + static_cast<int>(top);
    const TruncatedSeries F = expand_sum(f, point, order);
    if (F.offset() < 0) throw InternalError("f has a pole at " + to_string(point));
    std::vector<std::vector<Rational>> dF(top + 1, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    for (int e = 0; e <= order; ++e) dF[0][static_cast<std::size_t>(e)] = F.coefficient(e);
    for (unsigned j = 1; j <= top; ++j)
      for (int e = 0; e + static_cast<int>(j) <= order; ++e)
        dF[j][static_cast<std::size_t>(e)] = dF[j - 1][static_cast<std::size_t>(e) + 1] * (e + 1);
    std::vector<TruncatedSeries> out;
    for (unsigned i = 0; i <= top; ++i) {
      std::vector<Rational> acc(static_cast<std::size_t>(need) + 1);
      for (unsigned j = 0; j <= i; ++j) {
        const Int c = stirling1(i, j);
        if (c == 0) continue;
        for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += c * dF[j][e];
      }
      const Rational scale = rpow(point, -static_cast<long>(i));
      out.push_back((TruncatedSeries(0, std::move(acc)) * series_exp_scaled(-Int(i), static_cast<unsigned>(need))).scaled(scale));
    }
    return out;
  };

  StatBundle b;
  b.engine = "ct";
  {
    const auto at_one = f_derivative_series(1, 2, 0);
    const Rational ar(a), f1 = at_one[1].coefficient(0), f2 = at_one[2].coefficient(0);
    b.n = exact_integer(f1 / ar - make_rational(a - 1, 2), "n from f'(1)");
    b.s = exact_integer(f2 / (2 * ar) - Rational(a - 1) * f1 / (2 * ar) + make_rational(a * a - 1, 12), "s from f''(1)");
  }

  // g^{(k)}(point) for k = 0..max_mu via the Leibniz expansion of f/(1-x^a).
  auto g_derivatives = [&](const Rational& point) {
    std::size_t needF = 0;
    for (unsigned i = 0; i <= max_mu; ++i) needF = std::max(needF, max_pole(D[i], point));
    const auto FS = f_derivative_series(point, max_mu, static_cast<int>(needF));
    std::vector<TruncatedSeries> DS;
    for (unsigned i = 0; i <= max_mu; ++i) DS.push_back(expand_sum(D[i], point, 0));
    std::vector<Rational> out;
    for (unsigned k = 0; k <= max_mu; ++k) {
      RationalTerm geo(LaurentPoly::monomial(0, Rational(factorial(k))), std::vector<Int>(k + 1, Int(1)));
      TruncatedSeries total = expand_term(geo, point, 0);
      for (unsigned i = 0; i <= k; ++i) total = total - (DS[i] * FS[k - i]).scaled(Rational(binomial(Int(k), i)));
      out.push_back(constant_term_checked(total, point));
    }
    return out;
  };

  const auto g1 = g_derivatives(1);
  if (g1[0] != Rational(*b.n))
    throw InternalError("g(1) = " + to_string(g1[0]) + " but n = " + to_string(*b.n));
  for (unsigned mu = 1; mu <= max_mu; ++mu) {
    Rational acc = 0;
    for (unsigned k = 1; k <= mu; ++k) acc += stirling2(mu, k) * g1[k];
    b.s_mu[mu] = exact_integer(acc, "s_mu from g^(k)(1)");
    b.shat_mu[mu] = exact_integer(g1[mu] / Rational(factorial(mu)), "binomial moment from g^(mu)(1)");
  }
  for (const auto& lam : lambdas) {
    const auto gl = g_derivatives(lam);
    auto& slot = b.s_mu_lambda[lam];
    for (unsigned mu = 1; mu <= max_mu; ++mu) {
      Rational acc = 0;
      for (unsigned k = 1; k <= mu; ++k) acc += stirling2(mu, k) * rpow(lam, k) * gl[k];
      slot[mu] = acc;
    }
  }
  return b;
}

}  // namespace frob
