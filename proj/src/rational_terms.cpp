#include "frob/rational_terms.hpp"

#include <algorithm>

#include "frob/errors.hpp"
#include "frob/stat_bundle.hpp"

namespace frob {

LaurentPoly LaurentPoly::monomial(const Int& e, const Rational& c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::block(const Int& start, const Int& span) {
  LaurentPoly p;
  p.add(start, 1);
  p.add(start + span, -1);
  return p;
}

void LaurentPoly::add(const Int& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& k) const {
  LaurentPoly r;
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e != 0) r.add(e - 1, c * e);
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rpow(x, require_int64(e, "exponent"));
  return acc;
}

RationalTerm::RationalTerm(LaurentPoly num, std::vector<Int> den) : numerator(std::move(num)), denominator(std::move(den)) {
  for (const auto& b : denominator)
    if (b == 0) throw DomainError("denominator factor 1 - x^0 is zero");
  std::sort(denominator.begin(), denominator.end());
}

RationalTermSum::RationalTermSum(std::vector<RationalTerm> terms) {
  for (auto& t : terms) add(std::move(t));
}

void RationalTermSum::add(RationalTerm t) {
  if (t.numerator.empty()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->denominator == t.denominator) {
      it->numerator += t.numerator;
      if (it->numerator.empty()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back(std::move(t));
}

RationalTermSum& RationalTermSum::operator+=(const RationalTermSum& o) {
  for (const auto& t : o.terms_) add(t);
  return *this;
}

RationalTermSum RationalTermSum::operator+(const RationalTermSum& o) const {
  RationalTermSum r = *this;
  r += o;
  return r;
}

RationalTermSum RationalTermSum::operator-(const RationalTermSum& o) const { return *this + o.scaled(-1); }

RationalTermSum RationalTermSum::scaled(const Rational& c) const {
  RationalTermSum r;
  for (const auto& t : terms_) r.add(RationalTerm(t.numerator.scaled(c), t.denominator));
  return r;
}

RationalTermSum differentiate(const RationalTermSum& S) {
  RationalTermSum out;
  for (const auto& t : S.terms()) {
    out.add(RationalTerm(t.numerator.derivative(), t.denominator));
    // d/dx (1-x^b)^{-p} = p b x^{b-1} (1-x^b)^{-p-1}
    const auto& den = t.denominator;
    for (std::size_t i = 0; i < den.size();) {
      std::size_t j = i;
      while (j < den.size() && den[j] == den[i]) ++j;
      const Int& b = den[i];
      const Int p = Int(static_cast<unsigned long>(j - i));
      auto num = t.numerator * LaurentPoly::monomial(b - 1, Rational(p * b));
      auto bigger = den;
      bigger.push_back(b);
      out.add(RationalTerm(std::move(num), std::move(bigger)));
      i = j;
    }
  }
  return out;
}

nlohmann::json to_json(const RationalTermSum& S) {
  auto arr = nlohmann::json::array();
  for (const auto& t : S.terms()) {
    nlohmann::json jt;
    jt["num"] = nlohmann::json::array();
    for (const auto& [e, c] : t.numerator.terms()) jt["num"].push_back({int_to_json(e), to_string(c)});
    jt["den"] = nlohmann::json::array();
    for (const auto& b : t.denominator) jt["den"].push_back(int_to_json(b));
    arr.push_back(jt);
  }
  return arr;
}

RationalTermSum rational_term_sum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("rational term sum JSON must be an array");
  RationalTermSum S;
  for (const auto& jt : j) {
    LaurentPoly num;
    for (const auto& pair : jt.at("num")) {
      const auto& c = pair.at(1);
      num.add(int_from_json(pair.at(0)), c.is_string() ? parse_rational(c.get<std::string>()) : Rational(int_from_json(c)));
    }
    std::vector<Int> den;
    for (const auto& b : jt.at("den")) den.push_back(int_from_json(b));
    S.add(RationalTerm(std::move(num), std::move(den)));
  }
  return S;
}

}  // namespace frob
