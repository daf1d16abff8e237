#include "frob/series.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

namespace {

constexpr unsigned kStored = 30;

const std::vector<Rational>& inverse_factorials() {
  static const std::vector<Rational> t = [] {
    std::vector<Rational> v;
    for (unsigned n = 0; n <= kStored; ++n) v.push_back(Rational(Int(1), factorial(n)));
    return v;
  }();
  return t;
}

// -B_n/n!, the coefficients of t/(1-e^t).
const std::vector<Rational>& bernoulli_series() {
  static const std::vector<Rational> t = [] {
    std::vector<Rational> v;
    for (unsigned n = 0; n <= kStored; ++n) v.push_back(-bernoulli(n) / Rational(factorial(n)));
    return v;
  }();
  return t;
}

Rational inv_fact(unsigned n) { return n <= kStored ? inverse_factorials()[n] : Rational(Int(1), factorial(n)); }

Rational neg_bernoulli_over_fact(unsigned n) {
  return n <= kStored ? bernoulli_series()[n] : Rational(-bernoulli(n) / Rational(factorial(n)));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int offset, std::vector<Rational> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(int order) { return TruncatedSeries(order + 1, {}); }

Rational TruncatedSeries::coefficient(int e) const {
  if (e > order()) throw InternalError("series coefficient t^" + std::to_string(e) + " is past the truncation order");
  if (e < offset_) return 0;
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  const int ord = std::min(order(), o.order());
  const int off = std::min(offset_, o.offset_);
  if (ord < off) return zero(ord);
  std::vector<Rational> c(static_cast<std::size_t>(ord - off + 1));
  for (int e = off; e <= ord; ++e) {
    auto& slot = c[static_cast<std::size_t>(e - off)];
    if (e >= offset_) slot += coeffs_[static_cast<std::size_t>(e - offset_)];
    if (e >= o.offset_) slot += o.coeffs_[static_cast<std::size_t>(e - o.offset_)];
  }
  return TruncatedSeries(off, std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o.scaled(-1); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  const int ord = std::min(order() + o.offset_, o.order() + offset_);
  const int off = offset_ + o.offset_;
  if (ord < off) return zero(ord);
  std::vector<Rational> c(static_cast<std::size_t>(ord - off + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size() && i + j < c.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return TruncatedSeries(off, std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& k) const {
  auto c = coeffs_;
  for (auto& x : c) x *= k;
  return TruncatedSeries(offset_, std::move(c));
}

TruncatedSeries TruncatedSeries::shifted(int k) const { return TruncatedSeries(offset_ + k, coeffs_); }

TruncatedSeries TruncatedSeries::truncated(int ord) const {
  if (ord >= order()) return *this;
  if (ord < offset_) return zero(ord);
  return TruncatedSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (ord - offset_ + 1)));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw DomainError("series inverse needs a nonzero leading coefficient");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> inv(n);
  const Rational lead = Rational(1) / coeffs_[0];
  inv[0] = lead;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * inv[k - i];
    inv[k] = -acc * lead;
  }
  return TruncatedSeries(-offset_, std::move(inv));
}

TruncatedSeries TruncatedSeries::normalized() const {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  return TruncatedSeries(offset_ + static_cast<int>(skip), std::vector<Rational>(coeffs_.begin() + skip, coeffs_.end()));
}

TruncatedSeries series_exp(unsigned order) {
  std::vector<Rational> c;
  for (unsigned n = 0; n <= order; ++n) c.push_back(inv_fact(n));
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries series_exp_scaled(const Int& b, unsigned order) {
  std::vector<Rational> c;
  Int pw = 1;
  for (unsigned n = 0; n <= order; ++n) {
    c.push_back(pw * inv_fact(n));
    pw *= b;
  }
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries series_t_over_one_minus_exp(const Int& b, unsigned order) {
  if (b == 0) throw DomainError("t/(1-e^{bt}) needs b != 0");
  std::vector<Rational> c;
  Rational pw = Rational(1) / Rational(b);  // b^{n-1}
  for (unsigned n = 0; n <= order; ++n) {
    c.push_back(neg_bernoulli_over_fact(n) * pw);
    pw *= b;
  }
  return TruncatedSeries(0, std::move(c));
}

}  // namespace frob
