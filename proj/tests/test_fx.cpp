#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/closed_forms.hpp"
#include "frob/ct.hpp"
#include "frob/errors.hpp"
#include "frob/fx.hpp"
#include "frob/grid.hpp"
#include "frob/nr_engine.hpp"
#include "frob/verify.hpp"
#include "support.hpp"

using namespace frob;

namespace {

std::map<Int, Int> poly(std::initializer_list<long> exps) {
  std::map<Int, Int> m;
  for (long e : exps) m[e] += 1;
  return m;
}

FamilySpec spec(FamilyTag tag, std::map<std::string, Int> p) { return {tag, std::move(p)}; }

NrTable table_of(const FamilySpec& s) { return compute_nr(family_tuple(s)); }

}  // namespace

TEST_CASE("f(x) from a residue table") {
  const auto T = compute_nr(Tuple::parse("5,9,11"));
  const auto f = fx_from_table(T);
  CHECK(expand_to_polynomial(f) == poly({0, 9, 11, 18, 22}));
  CHECK(expand_to_polynomial(fx_from_table(compute_nr(Tuple::parse("2,3")))) == poly({0, 3}));
  // degree = g + a
  CHECK(expand_to_polynomial(f).rbegin()->first == 17 + 5);
}

TEST_CASE("family constructors expand to the table") {
  const auto pm = spec(FamilyTag::Pm, {{"a", 5}, {"h", 2}, {"d", 1}});
  CHECK(expand_to_polynomial(fx_family(pm)) == poly({0, 9, 11, 18, 22}));
  const auto ar = spec(FamilyTag::Arith, {{"a", 7}, {"h", 1}, {"d", 1}, {"k", 2}});
  CHECK(expand_to_polynomial(fx_family(ar)) == poly({0, 8, 9, 17, 18, 26, 27}));
  const auto a2 = spec(FamilyTag::A2j, {{"a", 9}, {"h", 1}, {"d", 1}, {"j", 4}});
  CHECK(fx_equivalence_check(fx_family(a2), compute_nr(Tuple::parse("9,10,11,13"))).equal);
  CHECK(fx_equivalence_check(fx_family(pm), compute_nr(Tuple::parse("5,9,11"))).equal);
}

TEST_CASE("corrupted sums are caught at the corrupted exponent") {
  const auto pm = spec(FamilyTag::Pm, {{"a", 5}, {"h", 2}, {"d", 1}});
  const auto T = compute_nr(Tuple::parse("5,9,11"));
  auto bad = fx_family(pm) + RationalTermSum({RationalTerm(LaurentPoly::monomial(18, -1) + LaurentPoly::monomial(19), {})});
  auto v = fx_equivalence_check(bad, T);
  CHECK_FALSE(v.equal);
  REQUIRE(v.mismatch_exponent.has_value());
  CHECK(*v.mismatch_exponent == 18);
  CHECK(v.got == 0);
  CHECK(v.want == 1);
  // a sum that is not a polynomial at all
  bad = fx_family(pm) + RationalTermSum({RationalTerm(LaurentPoly::monomial(0), {Int(3)})});
  v = fx_equivalence_check(bad, T);
  CHECK_FALSE(v.equal);
  CHECK_FALSE(v.mismatch_exponent.has_value());
}

TEST_CASE("expansion limits") {
  const RationalTermSum rational({RationalTerm(LaurentPoly::monomial(0), {Int(2)})});
  CHECK_THROWS_AS(expand_to_polynomial(rational), DomainError);
  const RationalTermSum wide({RationalTerm(LaurentPoly::block(0, 1000000), {Int(1)})});
  CHECK_THROWS_AS(expand_to_polynomial(wide, 1000), ResourceError);
  CHECK(expand_to_polynomial(wide).size() == 1000000);
  // negative exponents in the denominator flip sign
  const RationalTermSum flipped({RationalTerm(LaurentPoly::block(0, -6), {Int(-3)})});
  CHECK(expand_to_polynomial(flipped) == poly({-3, 0}));  // 1 + x^{-3}
}

TEST_CASE("scale has no constructor; guards are enforced") {
  CHECK_THROWS_AS(fx_family(spec(FamilyTag::Scale, {{"a", 5}, {"d", 2}, {"b1", 3}, {"b2", 7}})), DomainError);
  CHECK_THROWS_AS(fx_family(spec(FamilyTag::OddSteps, {{"a", 8}, {"h", 1}, {"d", 1}, {"k", 1}})), PreconditionError);
  FxOptions loose;
  loose.appendix_guards = false;
  CHECK_NOTHROW(fx_family(spec(FamilyTag::OddSteps, {{"a", 8}, {"h", 1}, {"d", 1}, {"k", 1}}), loose));
}

TEST_CASE("square family: double sum and four-term form agree") {
  for (long a = 2; a <= 14; ++a)
    for (long h = 1; h <= 4; ++h)
      for (long d = 1; d <= 4; ++d) {
        const auto s = spec(FamilyTag::Square, {{"a", a}, {"h", h}, {"d", d}});
        try {
          family_tuple(s);
          evaluate_family(s);
        } catch (const PreconditionError&) {
          continue;
        }
        const auto four = expand_to_polynomial(fx_family(s));
        CHECK(four == expand_to_polynomial(fx_square_double_sum(a, h, d)));
        CHECK(fx_equivalence_check(fx_square_double_sum(a, h, d), table_of(s)).equal);
      }
}

TEST_CASE("property: every constructor on its grid: f(1) = a, degree g + a, equivalence") {
  const std::vector<std::pair<FamilyTag, std::string>> grids = {
      {FamilyTag::Aj, "a=3..40,h=1..3,d=1..3,j=3..7"},
      {FamilyTag::A2j, "a=3..40,h=1..3,d=1..3,j=3..7"},
      {FamilyTag::Square, "a=2..9,h=1..3,d=1..3"},
      {FamilyTag::Pm, "a=2..40,h=1..3,d=1..3"},
      {FamilyTag::Arith, "a=2..40,h=1..3,d=1..3,k=1..6"},
      {FamilyTag::TruncArith, "a=2..40,h=1..3,d=1..3,K=1..3,k=3..8"},
      {FamilyTag::OddSteps, "a=2..40,h=1..3,d=1..5,k=1..5"},
      {FamilyTag::EvenSteps, "a=2..40,h=1..3,d=1..5,k=1..5"},
  };
  for (const auto& [tag, grid] : grids) {
    int count = 0;
    for (const auto& s : family_grid(tag, parse_grid(grid))) {
      RationalTermSum f;
      try {
        f = fx_family(s);
      } catch (const PreconditionError&) {
        continue;
      }
      const auto T = table_of(s);
      CHECK_MESSAGE(value_at_one(f) == Rational(T.modulus), s.str());
      const auto v = fx_equivalence_check(f, T);
      CHECK_MESSAGE(v.equal, s.str() << ": " << v.message);
      CHECK(expand_to_polynomial(f).rbegin()->first == T.max_value());
      ++count;
    }
    CHECK_MESSAGE(count > 20, family_name(tag));
  }
}

// The odd/even-step constructors are stated with d > h. Observed: they still
// reproduce the table when d <= h, on every instance of this grid.
TEST_CASE("odd/even-step constructors without the d > h guard") {
  FxOptions loose;
  loose.appendix_guards = false;
  for (const auto tag : {FamilyTag::OddSteps, FamilyTag::EvenSteps}) {
    int count = 0;
    for (const auto& s : family_grid(tag, parse_grid("a=2..40,h=1..5,d=1..5,k=1..6"))) {
      if (s.at("d") > s.at("h")) continue;
      RationalTermSum f;
      try {
        f = fx_family(s, loose);
      } catch (const PreconditionError&) {
        continue;
      }
      const auto v = fx_equivalence_check(f, table_of(s));
      CHECK_MESSAGE(v.equal, s.str() << ": " << v.message);
      ++count;
    }
    CHECK(count > 100);
  }
}
