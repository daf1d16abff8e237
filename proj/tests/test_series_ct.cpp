#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/ct.hpp"
#include "frob/errors.hpp"
#include "frob/fx.hpp"
#include "frob/nr_engine.hpp"
#include "frob/oracle.hpp"
#include "frob/series.hpp"
#include "support.hpp"

using namespace frob;
using frob::testing::Gen;

namespace {

std::vector<Rational> Q(std::initializer_list<Rational> v) { return v; }

RationalTermSum single(LaurentPoly num, std::vector<Int> den) {
  return RationalTermSum({RationalTerm(std::move(num), std::move(den))});
}

RationalTermSum fx_of(const std::string& csv) { return fx_from_table(compute_nr(Tuple::parse(csv))); }

// The worked f_1 term: -dk (x^c - x^{c+(ah+dk)s}) / ((1-x^d)(1-x^{ah+dk})), c = dk+ah+d-1.
RationalTerm f1_term(const Int& a, const Int& h, const Int& d, const Int& k, const Int& s) {
  const Int c = d * k + a * h + d - 1;
  LaurentPoly num = LaurentPoly::block(c, (a * h + d * k) * s).scaled(Rational(-d * k));
  return RationalTerm(num, {d, a * h + d * k});
}

}  // namespace

TEST_CASE("stored series") {
  CHECK(series_exp(2).coefficients() == Q({1, 1, Rational(1, 2)}));
  CHECK(series_exp(0).coefficients() == Q({1}));
  CHECK(series_exp(4).coefficients() == Q({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  CHECK(series_t_over_one_minus_exp(1, 4).coefficients() == Q({-1, Rational(1, 2), Rational(-1, 12), 0, Rational(1, 720)}));
  CHECK(series_t_over_one_minus_exp(2, 1).coefficients() == Q({Rational(-1, 2), Rational(1, 2)}));
  CHECK(series_t_over_one_minus_exp(-1, 0).coefficients() == Q({1}));
  CHECK_THROWS_AS(series_t_over_one_minus_exp(0, 3), DomainError);
  // past the stored tables
  CHECK(series_exp(35).coefficient(35) == Rational(Int(1), factorial(35)));
  CHECK(series_exp_scaled(3, 3).coefficients() == Q({1, 3, Rational(9, 2), Rational(9, 2)}));
}

TEST_CASE("series arithmetic") {
  const auto e = series_exp(8);
  const auto inv = e.inverse();
  CHECK(inv.coefficients() == series_exp_scaled(-1, 8).coefficients());
  const auto one = e * inv;
  CHECK(one.coefficient(0) == 1);
  for (int k = 1; k <= 8; ++k) CHECK(one.coefficient(k) == 0);
  CHECK((e * series_exp(5)).order() == 5);
  CHECK_THROWS_AS(e.truncated(3).coefficient(4), InternalError);
  const auto shifted = e.shifted(-2);
  CHECK(shifted.offset() == -2);
  CHECK(shifted.coefficient(-2) == 1);
  CHECK(TruncatedSeries(0, Q({0, 0, 3})).normalized().offset() == 2);
  CHECK_THROWS(TruncatedSeries(0, Q({0, 1})).inverse());
  // t/(1-e^{bt}) * (1-e^{bt})/t = 1
  const auto p = series_t_over_one_minus_exp(3, 6);
  const auto q = (TruncatedSeries(0, Q({1, 0, 0, 0, 0, 0, 0, 0})) - series_exp_scaled(3, 7)).shifted(-1).normalized();
  const auto r = p * q.truncated(6);
  CHECK(r.coefficient(0) == 1);
  for (int k = 1; k <= r.order(); ++k) CHECK(r.coefficient(k) == 0);
}

TEST_CASE("constant terms of single terms") {
  CHECK(ct_term(RationalTerm(LaurentPoly::block(0, 6), {2})) == 3);
  CHECK(ct_term(RationalTerm(LaurentPoly::block(0, 7), {1})) == 7);
  CHECK(ct_term(f1_term(7, 1, 1, 2, 3)) == 105);
  for (long k = 1; k <= 20; ++k)
    for (long b = 1; b <= 20; ++b) CHECK(ct_term(RationalTerm(LaurentPoly::block(0, k * b), {b})) == k);
}

TEST_CASE("worked f_1 value on a parameter sweep") {
  Gen gen(51);
  for (int i = 0; i < 40; ++i) {
    const Int a = gen.uniform(2, 30), h = gen.uniform(1, 5), d = gen.uniform(1, 5), k = gen.uniform(1, 10),
              s = gen.uniform(1, 8);
    const Rational want = make_rational(k * s, 2) * Rational(a * h * s + d * k * s + a * h + d * k + d - 2);
    CHECK(ct_term(f1_term(a, h, d, k, s)) == want);
  }
}

TEST_CASE("truncation order is sufficient") {
  Gen gen(52);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly num;
    for (int t = 0; t < 4; ++t) num.add(gen.uniform(0, 30), Rational(gen.uniform(-5, 5)));
    std::vector<Int> den;
    const auto nd = gen.uniform(0, 3);
    for (int t = 0; t < nd; ++t) den.emplace_back(static_cast<long>(gen.uniform(1, 6)));
    const RationalTerm T(num, den);
    const Rational base = ct_term(T);
    for (unsigned extra = 1; extra <= 3; ++extra) CHECK(ct_term(T, extra) == base);
  }
}

TEST_CASE("differentiation") {
  const auto d1 = differentiate(single(LaurentPoly::monomial(5), {}));
  REQUIRE(d1.size() == 1);
  CHECK(d1.terms()[0].numerator == LaurentPoly::monomial(4, 5));
  const auto d2 = differentiate(single(LaurentPoly::monomial(0), {2}));
  // 2x / (1-x^2)^2, possibly over a different but equal arrangement
  CHECK(value_at(d2, Rational(1, 3)) == Rational(2, 3) / ((1 - Rational(1, 9)) * (1 - Rational(1, 9))));
  CHECK(value_at(d2, Rational(-2)) == Rational(-4) / Rational(9));

  const auto f = fx_of("5,9,11");
  CHECK(value_at_one(f) == 5);
  CHECK(value_at_one(differentiate(f)) == 60);
  CHECK(value_at_one(differentiate(differentiate(f))) == 950);
}

TEST_CASE("property: derivative agrees with the expanded coefficients") {
  Gen gen(53);
  for (int i = 0; i < 40; ++i) {
    const auto A = gen.small_tuple(12, 4, 25);
    const auto T = compute_nr(A);
    if (T.max_value() > 200) continue;
    // f(x)/(1-x^b) * (1-x^b): a rational form of the same polynomial
    const Int b = gen.uniform(1, 5);
    LaurentPoly num;
    for (const auto& v : T.values) num += LaurentPoly::monomial(v) * LaurentPoly::block(0, b);
    const auto S = single(num, {b});
    const auto poly = expand_to_polynomial(differentiate(S));
    std::map<Int, Int> want;
    for (const auto& v : T.values)
      if (v > 0) want[v - 1] += v;
    CHECK(poly == want);
  }
}

TEST_CASE("poles must cancel") {
  const auto S = single(LaurentPoly::monomial(0), {1});
  CHECK_THROWS_AS(value_at_one(S), InternalError);
  CHECK(value_at(S, Rational(1, 2)) == 2);
  // the two pole parts cancel in the sum: 1/(1-x) - x/(1-x) = 1
  const auto T = S + single(LaurentPoly::monomial(1, -1), {1});
  CHECK(value_at_one(T) == 1);
}

TEST_CASE("property: value_at_one is linear") {
  Gen gen(54);
  for (int i = 0; i < 40; ++i) {
    const auto A = gen.small_tuple(20, 4, 30), B = gen.small_tuple(20, 4, 30);
    const auto f = fx_from_table(compute_nr(A)), g = fx_from_table(compute_nr(B));
    const auto sum = f + differentiate(g).scaled(Rational(-3, 7));
    CHECK(value_at_one(sum) == value_at_one(f) - Rational(3, 7) * value_at_one(differentiate(g)));
  }
}

TEST_CASE("statistics through the constant-term pipeline") {
  auto b = stats_via_ct(fx_of("5,16,19,22"), 5, 1);
  CHECK(*b.n == 17);
  CHECK(*b.s == 209);
  CHECK_FALSE(b.g.has_value());
  CHECK(b.engine == "ct");
  b = stats_via_ct(fx_of("2,3"), 2, 1);
  CHECK(*b.n == 1);
  CHECK(*b.s == 1);
  b = stats_via_ct(fx_of("5,9,11"), 5, 2);
  CHECK(b.s_mu.at(2) == 781);
  CHECK_THROWS_AS(stats_via_ct(fx_of("5,9,11"), 6, 1), DomainError);
  CHECK_THROWS_AS(stats_via_ct(fx_of("5,9,11"), 5, 1, {Rational(1)}), DomainError);
}

TEST_CASE("property: ct pipeline equals the oracle, including weighted sums") {
  Gen gen(55);
  const std::vector<Rational> lambdas{Rational(-1), Rational(1, 2), Rational(-2, 3), Rational(3)};
  for (int i = 0; i < 40; ++i) {
    const auto A = gen.small_tuple(15, 4, 30);
    const auto ct = stats_via_ct(fx_from_table(compute_nr(A)), A.modulus(), 4, lambdas);
    const auto orc = oracle_stats(A, 4, lambdas);
    const auto diff = compare_bundles(ct, orc);
    CHECK_MESSAGE(diff.empty(), A.str() << ": " << (diff.empty() ? "" : diff.front()));
    CHECK(ct.s_mu_lambda.size() == lambdas.size());
  }
}

TEST_CASE("rational term sums: merging and JSON") {
  RationalTermSum S;
  S.add(RationalTerm(LaurentPoly::monomial(3), {Int(4), Int(2)}));
  S.add(RationalTerm(LaurentPoly::monomial(5, 2), {Int(2), Int(4)}));
  CHECK(S.size() == 1);
  S.add(RationalTerm(LaurentPoly::monomial(-1, Rational(1, 3)), {}));
  const auto back = rational_term_sum_from_json(to_json(S));
  CHECK(back.size() == S.size());
  for (const auto x : {Rational(1, 2), Rational(-3), Rational(2, 5)}) CHECK(value_at(back, x) == value_at(S, x));
  CHECK((S - S).size() <= S.size());
  CHECK(value_at(S - S, Rational(1, 2)) == 0);
}
