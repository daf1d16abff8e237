#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "frob/numeric.hpp"
#include "frob/stat_bundle.hpp"
#include "frob/tuple.hpp"

namespace frob {

struct OracleLimits {
  std::int64_t frobenius_cap = 10'000'000;
  // Honours FROB_ORACLE_CAP when set.
  static OracleLimits from_env();
};

// Number of nonnegative solutions of sum a_i x_i = a0.
Int denumerant(const Int& a0, const Tuple& A, const OracleLimits& limits = OracleLimits::from_env());

struct GapSet {
  std::vector<std::int64_t> members;  // sorted
  std::int64_t frobenius = 0;
};

// Bitmap of representable integers in [0, frobenius], built by a sieve that
// stops after min(A) consecutive representable values.
class Representability {
 public:
  Representability(const Tuple& A, const OracleLimits& limits);

  std::int64_t frobenius() const { return frobenius_; }
  bool representable(std::int64_t x) const;
  std::int64_t gap_count() const;
  Int gap_sum() const;
  void for_each_gap(const std::function<void(std::int64_t)>& fn) const;

 private:
  std::vector<std::uint64_t> words_;
  std::int64_t frobenius_ = 0;
};

GapSet gap_set(const Tuple& A, const OracleLimits& limits = OracleLimits::from_env());

// Everything by direct summation over the gaps; s_mu and shat_mu for 1 <= mu <= max_mu,
// weighted sums for every lambda (lambda must not be 0 or 1).
StatBundle oracle_stats(const Tuple& A, unsigned max_mu, const std::vector<Rational>& lambdas,
                        const OracleLimits& limits = OracleLimits::from_env());

}  // namespace frob
