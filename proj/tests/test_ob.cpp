#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/errors.hpp"
#include "frob/nr_engine.hpp"
#include "frob/ob.hpp"
#include "support.hpp"

using namespace frob;
using frob::testing::Gen;

namespace {

ObProblem B(std::initializer_list<long> w) { return {{w.begin(), w.end()}, false}; }

// Both defining equations of a witness.
void check_witness(const ObProblem& P, const ObSolution& s, const Int& M) {
  REQUIRE(s.feasible());
  REQUIRE(s.witness.size() == P.weights.size());
  Int total = 0, count = 0;
  for (std::size_t i = 0; i < s.witness.size(); ++i) {
    CHECK(s.witness[i] >= 0);
    total += P.weights[i] * s.witness[i];
    count += s.witness[i];
  }
  CHECK(total == M);
  CHECK(count == *s.value);
}

std::vector<ObFamilyParams> small_families() {
  std::vector<ObFamilyParams> out;
  for (long j = 2; j <= 12; ++j) out.push_back({ObFamily::OneJ, j});
  for (long j = 3; j <= 12; ++j) out.push_back({ObFamily::OneTwoJ, j});
  for (long a = 2; a <= 12; ++a) out.push_back({ObFamily::OneAAPlusOne, 0, a});
  for (long k = 1; k <= 10; ++k) out.push_back({ObFamily::Prefix, 0, 0, k});
  for (long k = 3; k <= 12; ++k)
    for (long K = 1; 2 * K <= k - 1; ++K) out.push_back({ObFamily::Truncated, 0, 0, k, K});
  for (long k = 1; k <= 8; ++k) out.push_back({ObFamily::OddSteps, 0, 0, k});
  for (long k = 1; k <= 8; ++k) out.push_back({ObFamily::EvenSteps, 0, 0, k});
  return out;
}

}  // namespace

TEST_CASE("general solver") {
  auto s = ob_general(B({1, 4}), 10);
  CHECK(*s.value == 4);
  CHECK(s.witness == std::vector<Int>{2, 2});
  s = ob_general(B({1, 4, 5}), 8);
  CHECK(*s.value == 2);
  CHECK(s.witness == std::vector<Int>{0, 2, 0});
  s = ob_general(B({1, 4, 5}), 0);
  CHECK(*s.value == 0);
  CHECK(s.witness == std::vector<Int>{0, 0, 0});
  CHECK_FALSE(ob_general(B({3, 5}), 7).feasible());
  CHECK_THROWS_AS(ob_general(B({1, 4}), -1), DomainError);
  CHECK_THROWS_AS(ob_general(B({4, 1}), 3), DomainError);
  CHECK_THROWS_AS(ob_general(B({0, 1}), 3), DomainError);
}

TEST_CASE("closed forms, spot values") {
  CHECK(*ob_closed_form({ObFamily::OneAAPlusOne, 0, 4}, 8).value == 2);
  CHECK(*ob_closed_form({ObFamily::OneTwoJ, 5}, 13).value == 4);
  CHECK(*ob_closed_form({ObFamily::Prefix, 0, 0, 3}, 7).value == 3);
  CHECK(*ob_closed_form({ObFamily::PlusMinus}, -6).value == 6);
  CHECK_FALSE(ob_closed_form({ObFamily::Truncated, 0, 0, 5, 2}, 2).feasible());
  CHECK(*ob_closed_form({ObFamily::Truncated, 0, 0, 5, 2}, 0).value == 0);
  CHECK_THROWS_AS(ob_problem({ObFamily::Truncated, 0, 0, 4, 2}), DomainError);
}

TEST_CASE("property: closed form = DP for all M <= 500, with valid witnesses") {
  for (const auto& F : small_families()) {
    const auto P = ob_problem(F);
    const auto dp = ob_values(P, 500);
    for (long M = 0; M <= 500; ++M) {
      const auto cf = ob_closed_form(F, M);
      const auto want = dp[static_cast<std::size_t>(M)];
      CHECK_MESSAGE(cf.feasible() == (want >= 0), to_string(F.family) << " M=" << M);
      if (!cf.feasible() || want < 0) continue;
      CHECK_MESSAGE(*cf.value == Int(static_cast<long>(want)), to_string(F.family) << " j=" << F.j << " a=" << F.a
                                                                                   << " k=" << F.k << " K=" << F.K << " M=" << M);
      check_witness(P, cf, M);
    }
  }
}

TEST_CASE("property: DP witnesses are feasible on random weights") {
  Gen gen(31);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Int> w;
    for (long b = 1; b <= 30 && w.size() < 5; ++b)
      if (gen.uniform(0, 4) == 0 || (w.empty() && b > 3)) w.push_back(b);
    const ObProblem P{w, false};
    const auto vals = ob_values(P, 300);
    for (int t = 0; t < 20; ++t) {
      const long M = static_cast<long>(gen.uniform(0, 300));
      const auto s = ob_general(P, M);
      CHECK(s.feasible() == (vals[static_cast<std::size_t>(M)] >= 0));
      if (s.feasible()) {
        CHECK(*s.value == Int(static_cast<long>(vals[static_cast<std::size_t>(M)])));
        check_witness(P, s, M);
      }
    }
  }
}

TEST_CASE("signed closed form equals a direct search") {
  const ObFamilyParams F{ObFamily::PlusMinus};
  for (long M = -60; M <= 60; ++M) {
    long best = -1;
    for (long x1 = 0; x1 <= 120; ++x1) {
      const long x2 = M + x1;
      if (x2 < 0) continue;
      if (best < 0 || x1 + x2 < best) best = x1 + x2;
    }
    const auto s = ob_closed_form(F, M);
    CHECK(*s.value == best);
    CHECK(s.witness[1] - s.witness[0] == M);
  }
}

TEST_CASE("N_dr through the reduction") {
  // (7,8,9), residue 5: ha*ceil(5/2) + 5
  auto r = ndr_via_reduction(7, 1, 1, B({1, 2}), 5, 3);
  CHECK(r.value == 26);
  CHECK(r.value == compute_nr(Tuple::parse("7,8,9")).values[5]);
  // (5,11): B = (1), residue 2 -> O = 2, 2*10 + 2
  r = ndr_via_reduction(5, 2, 1, B({1}), 2, 3);
  CHECK(r.value == 22);
  CHECK(ndr_via_reduction(5, 2, 1, B({1}), 0).value == 0);
  CHECK_THROWS_AS(ndr_via_reduction(5, 1, 1, B({4, 5}), 1, 0), UnresolvedError);
  CHECK_THROWS_AS(ndr_via_reduction(6, 1, 2, B({1}), 1), DomainError);
}

namespace {

struct Instance {
  Int a, h, d;
  ObProblem P;
  std::vector<Int> tuple;
};

Instance make_instance(const Int& a, const Int& h, const Int& d, const ObProblem& P) {
  Instance in{a, h, d, P, {a}};
  for (const auto& b : P.weights) in.tuple.push_back(h * a + b * d);
  return in;
}

}  // namespace

TEST_CASE("property: reduction reproduces every residue of the table") {
  Gen gen(32);
  std::vector<ObFamilyParams> fams = small_families();
  fams.push_back({ObFamily::PlusMinus});
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const auto& F = fams[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(fams.size()) - 1))];
    const auto P = ob_problem(F);
    const Int a = gen.uniform(2, 100), h = gen.uniform(1, 5), d = gen.uniform(1, 5);
    if (gcd(a, d) != 1) continue;
    const auto in = make_instance(a, h, d, P);
    if (!tuple_problem(in.tuple).empty()) continue;
    const auto T = compute_nr(Tuple(in.tuple));
    const auto cap = default_m_cap(a, P) + 4;
    for (long r = 0; r < a; ++r) {
      const auto res = ndr_via_reduction(a, h, d, P, r, cap);
      CHECK_MESSAGE(res.value == T.values[mod_floor(d * r, a).get_ui()], Tuple(in.tuple).str() << " r=" << r);
    }
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: prefix weights give non-decreasing N_dr(m)") {
  for (long a = 3; a <= 40; ++a)
    for (long k = 1; k < a && k <= 8; ++k)
      for (long h = 1; h <= 3; ++h)
        for (long d = 1; d <= 3; ++d) {
          if (gcd(a, d) != 1) continue;
          const auto P = ob_problem({ObFamily::Prefix, 0, 0, k});
          for (long r = 0; r < a; ++r) {
            const auto res = ndr_via_reduction(a, h, d, P, r);
            CHECK(res.monotone);
            CHECK(res.argmin_m == 0);
            CHECK(res.value == h * a * ceil_div(r, k) + d * r);
          }
        }
}

TEST_CASE("signed reduction is unimodal around its minimum") {
  const ObProblem pm{{-1, 1}, true};
  for (long a = 3; a <= 30; ++a)
    for (long h = 1; h <= 3; ++h)
      for (long d = 1; d <= 3; ++d) {
        if (gcd(a, d) != 1 || h * a - d <= 1) continue;
        const auto T = compute_nr(Tuple({a, h * a - d, h * a + d}));
        for (long r = 0; r < a; ++r) {
          const auto res = ndr_via_reduction(a, h, d, pm, r);
          CHECK(res.monotone);
          CHECK(res.value == T.values[mod_floor(d * r, a).get_ui()]);
          CHECK((res.argmin_m == 0 || res.argmin_m == -1));
        }
      }
}
