#pragma once

#include <vector>

#include "frob/numeric.hpp"

namespace frob {

// sum_{e=offset}^{order} c_e t^e + O(t^{order+1}) over exact rationals.
// Arithmetic never claims coefficients past what its inputs determine.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int offset, std::vector<Rational> coeffs);
  // 0 + O(t^{order+1}).
  static TruncatedSeries zero(int order);

  int offset() const { return offset_; }
  int order() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero below the offset; throws past the order.
  Rational coefficient(int exponent) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;
  TruncatedSeries shifted(int k) const;  // times t^k
  TruncatedSeries truncated(int order) const;
  // Requires a nonzero coefficient at the offset.
  TruncatedSeries inverse() const;
  // Leading zero coefficients dropped (offset raised accordingly).
  TruncatedSeries normalized() const;

 private:
  int offset_ = 0;
  std::vector<Rational> coeffs_;
};

// e^{t}: coefficients 1/n!, n = 0..order.
TruncatedSeries series_exp(unsigned order);
// e^{bt}.
TruncatedSeries series_exp_scaled(const Int& b, unsigned order);
// t/(1 - e^{bt}) = sum -B_n b^{n-1} t^n / n!.
TruncatedSeries series_t_over_one_minus_exp(const Int& b, unsigned order);

}  // namespace frob
