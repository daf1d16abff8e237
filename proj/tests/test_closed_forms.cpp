#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/closed_forms.hpp"
#include "frob/errors.hpp"
#include "frob/nr_engine.hpp"
#include "frob/oracle.hpp"
#include "frob/verify.hpp"
#include "support.hpp"

using namespace frob;
using frob::testing::Gen;

namespace {

StatBundle truth(std::vector<Int> A, unsigned mu = 0) { return stats_from_nr(compute_nr(Tuple(std::move(A))), mu); }

Int g_of(std::vector<Int> A) { return *truth(std::move(A)).g; }

}  // namespace

TEST_CASE("scaling") {
  CHECK(scale_g(9, 1, {10, 12}) == 35);
  CHECK(scale_g(5, 3, {2, 3}) == 13);
  CHECK(g_of({5, 6, 9}) == 13);
  CHECK_THROWS_AS(scale_g(6, 3, {2, 5}), PreconditionError);
  CHECK_THROWS_AS(scale_g(5, 1, {1, 3}), PreconditionError);
}

TEST_CASE("(a, ha+d, ha+jd)") {
  auto b = family_aj(10, 1, 1, 3);
  CHECK(*b.g == 38);
  CHECK(*b.n == 21);
  CHECK(*b.s == *truth({10, 11, 13}).s);
  b = family_aj(9, 1, 1, 3);
  CHECK(*b.g == 35);
  CHECK(b.tuple == std::vector<Int>{9, 10, 12});
  CHECK(b.engine == "closed-form");
}

TEST_CASE("(a, ha+d, ha+2d, ha+jd)") {
  CHECK(*family_a2j(6, 1, 1, 4).g == 11);
  const auto b = family_a2j(9, 1, 1, 4);
  CHECK(*b.g == 25);
  const auto o = oracle_stats(Tuple({9, 10, 11, 13}), 1, {});
  CHECK(*b.s == *o.s);
  CHECK(*b.n == *o.n);
}

TEST_CASE("square family") {
  auto b = family_square(3, 1, 1);
  CHECK(*b.g == 17);
  CHECK(*b.n == 13);
  CHECK(*b.s == *oracle_stats(Tuple({9, 10, 12, 13}), 1, {}).s);
  CHECK(*family_square(2, 1, 1).g == 3);
}

TEST_CASE("(a, ha-d, ha+d)") {
  const auto b = family_pm(5, 2, 1, 2);
  CHECK(*b.g == 17);
  CHECK(*b.n == 10);
  CHECK(*b.s == 73);
  CHECK(b.s_mu.at(2) == 781);
}

TEST_CASE("arithmetic sequences") {
  auto b = family_arith(7, 1, 1, 2);
  CHECK(*b.g == 20);
  CHECK(*b.n == 12);
  CHECK(*b.s == 106);
  CHECK(*family_arith(5, 1, 1, 4).g == 4);
  b = family_trunc_arith(7, 1, 1, 1, 3);
  CHECK(*b.g == 22);
  CHECK(*b.n == 12);
  CHECK(*family_trunc_arith(5, 1, 1, 1, 3).g == 11);
}

TEST_CASE("odd and even steps") {
  auto b = family_odd_steps(8, 1, 1, 1);
  CHECK(*b.g == 23);
  CHECK(*b.n == 14);
  CHECK(compute_nr(Tuple({8, 9, 11})).values == std::vector<Int>{0, 9, 18, 11, 20, 29, 22, 31});
  CHECK(*family_odd_steps(9, 1, 1, 1).g == 35);
  b = family_even_steps(9, 1, 1, 2);
  CHECK(*b.g == 25);
  CHECK(*b.n == *oracle_stats(Tuple({9, 10, 11, 13}), 0, {}).n);
  CHECK(*family_even_steps(8, 1, 1, 2).g == 23);
}

TEST_CASE("guards name the failed constraint") {
  try {
    family_aj(10, 1, 2, 3);
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("family aj: constraint") == 0);
  }
  CHECK_THROWS_AS(family_aj(6, 1, 2, 3), PreconditionError);       // gcd(a, d)
  CHECK_THROWS_AS(family_pm(5, 1, 4, 0), PreconditionError);       // ha - d > 1
  CHECK_THROWS_AS(family_arith(5, 1, 1, 5), PreconditionError);    // k <= a-1
  CHECK_THROWS_AS(family_trunc_arith(7, 1, 1, 2, 4), PreconditionError);
  CHECK_THROWS_AS(evaluate_family({FamilyTag::Square, {{"a", 3}, {"h", 1}}}), DomainError);
}

TEST_CASE("registry") {
  CHECK(family_registry().size() == 9);
  for (const auto& f : family_registry()) {
    CHECK(parse_family(f.name) == f.tag);
    CHECK(family_name(f.tag) == f.name);
  }
  CHECK_THROWS_AS(parse_family("nope"), DomainError);
  const FamilySpec spec{FamilyTag::Aj, {{"a", 10}, {"h", 1}, {"d", 1}, {"j", 3}}};
  CHECK(family_tuple(spec).str() == "(10,11,13)");
  CHECK(spec.str() == "aj a=10 h=1 d=1 j=3");
}

TEST_CASE("power sums below n") {
  for (long n = 0; n <= 30; ++n)
    for (unsigned p = 0; p <= 6; ++p) {
      Int acc = 0;
      for (long r = 0; r < n; ++r) acc += ipow(r, p);
      CHECK(power_sum_below(n, p) == acc);
    }
}

TEST_CASE("g(sa, sa+1, sa+a) = as(a+s-2) - 1") {
  for (long a = 3; a <= 12; ++a)
    for (long s = 1; s <= 6; ++s) {
      if (gcd(s * a, s * a + 1) != 1) continue;
      CHECK(g_sa_family(a, s) == g_of({s * a, s * a + 1, s * a + a}));
    }
}

TEST_CASE("g(a, a+1, a+2, a+j), j = 4, 5, 6, as sums of floors") {
  int with_theorem = 0;
  for (long a = 2; a <= 100; ++a)
    for (int j = 4; j <= 6; ++j) {
      if (!tuple_problem({a, a + 1, a + 2, a + j}).empty()) continue;
      const Int want = g_of({a, a + 1, a + 2, a + j});
      CHECK_MESSAGE(g_unit_a2j(a, j) == want, "a=" << a << " j=" << j);
      try {
        CHECK(*family_a2j(a, 1, 1, j).g == want);
        ++with_theorem;
      } catch (const PreconditionError&) {
      }
    }
  CHECK(with_theorem > 250);
}

TEST_CASE("property: g(a, dB) = d g(a, B) + (d-1) a") {
  Gen gen(41);
  int done = 0;
  while (done < 150) {
    const Int a = gen.uniform(2, 80), d = gen.uniform(1, 9);
    std::vector<Int> B;
    const auto n = gen.uniform(1, 3);
    for (int i = 0; i < n; ++i) B.emplace_back(static_cast<long>(gen.uniform(2, 120)));
    std::vector<Int> base{a}, scaled{a};
    for (const auto& b : B) {
      base.push_back(b);
      scaled.push_back(d * b);
    }
    if (!tuple_problem(base).empty() || !tuple_problem(scaled).empty()) continue;
    CHECK(g_of(scaled) == d * g_of(base) + (d - 1) * a);
    if (B.size() == 2) CHECK(scale_g(a, d, B) == g_of(scaled));
    ++done;
  }
}

TEST_CASE("property: every family matches the residue table on a small grid") {
  VerifyOptions opts;
  opts.ct = false;
  opts.max_mu = 3;
  const std::vector<std::pair<FamilyTag, std::string>> grids = {
      {FamilyTag::Aj, "a=3..30,h=1..4,d=1..4,j=3..8"},
      {FamilyTag::A2j, "a=3..30,h=1..4,d=1..4,j=3..8"},
      {FamilyTag::Square, "a=2..8,h=1..4,d=1..4"},
      {FamilyTag::Pm, "a=2..30,h=1..4,d=1..4"},
      {FamilyTag::Arith, "a=2..30,h=1..4,d=1..4,k=1..8"},
      {FamilyTag::TruncArith, "a=2..30,h=1..3,d=1..3,K=1..4,k=3..9"},
      {FamilyTag::OddSteps, "a=2..30,h=1..4,d=1..4,k=1..6"},
      {FamilyTag::EvenSteps, "a=2..30,h=1..4,d=1..4,k=1..6"},
      {FamilyTag::Scale, "a=2..12,d=1..4,b1=2..9,b2=2..9"},
  };
  for (const auto& [tag, grid] : grids) {
    const auto rep = verify_family(tag, parse_grid(grid), opts);
    CHECK_MESSAGE(rep.ok(), family_name(tag) << ": " << (rep.failures.empty() ? "" : describe_failure(rep.failures.front())));
    CHECK_MESSAGE(rep.instances > 20, family_name(tag));
  }
}

TEST_CASE("s_mu closed forms up to mu = 4") {
  for (long a = 3; a <= 25; ++a)
    for (long h = 1; h <= 3; ++h)
      for (long d = 1; d <= 3; ++d) {
        if (gcd(a, d) != 1) continue;
        if (h * a - d > 1) {
          const auto cf = family_pm(a, h, d, 4);
          const auto nr = truth(cf.tuple, 4);
          CHECK(cf.s_mu == nr.s_mu);
        }
        for (long k = 1; k < a && k <= 5; ++k) {
          const auto cf = family_arith(a, h, d, k, 4);
          CHECK(cf.s_mu == truth(cf.tuple, 4).s_mu);
        }
      }
}
