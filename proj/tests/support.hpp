#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "frob/numeric.hpp"
#include "frob/tuple.hpp"

namespace frob::testing {

// Small deterministic generator; every property test seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  // n generators in [lo, hi] with gcd 1 (redrawn until valid); first element is the smallest.
  Tuple tuple(std::size_t n, std::int64_t lo, std::int64_t hi) {
    for (;;) {
      std::vector<Int> v;
      for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(uniform(lo, hi)));
      std::sort(v.begin(), v.end());
      if (tuple_problem(v).empty()) return Tuple(v);
    }
  }

  // Random tuple whose smallest element is at most a1_max; sizes 2..max_n.
  Tuple small_tuple(std::int64_t a1_max, std::size_t max_n, std::int64_t spread) {
    for (;;) {
      const auto a1 = uniform(2, a1_max);
      const auto n = static_cast<std::size_t>(uniform(2, static_cast<std::int64_t>(max_n)));
      std::vector<Int> v{Int(static_cast<long>(a1))};
      for (std::size_t i = 1; i < n; ++i) v.emplace_back(static_cast<long>(uniform(a1 + 1, a1 + spread)));
      if (tuple_problem(v).empty()) return Tuple(v);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline Int I(long v) { return Int(v); }

}  // namespace frob::testing
