#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "frob/numeric.hpp"

namespace frob {

// Finite sum of c_e x^e, e any integer. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(const Int& e, const Rational& c = 1);
  // x^start - x^{start+span}: numerator of a geometric block.
  static LaurentPoly block(const Int& start, const Int& span);

  void add(const Int& e, const Rational& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  bool empty() const { return terms_.empty(); }
  const std::map<Int, Rational>& terms() const { return terms_; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

 private:
  std::map<Int, Rational> terms_;
};

// numerator / prod_j (1 - x^{b_j}); repeated b_j encode powers.
struct RationalTerm {
  LaurentPoly numerator;
  std::vector<Int> denominator;  // kept sorted

  RationalTerm() = default;
  RationalTerm(LaurentPoly num, std::vector<Int> den);
};

class RationalTermSum {
 public:
  RationalTermSum() = default;
  explicit RationalTermSum(std::vector<RationalTerm> terms);

  // Terms with the same denominator multiset are merged.
  void add(RationalTerm t);
  RationalTermSum& operator+=(const RationalTermSum& o);
  RationalTermSum operator+(const RationalTermSum& o) const;
  RationalTermSum operator-(const RationalTermSum& o) const;
  RationalTermSum scaled(const Rational& c) const;

  const std::vector<RationalTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<RationalTerm> terms_;
};

// x-derivative; denominators stay factored.
RationalTermSum differentiate(const RationalTermSum& S);

nlohmann::json to_json(const RationalTermSum& S);
RationalTermSum rational_term_sum_from_json(const nlohmann::json& j);

}  // namespace frob
