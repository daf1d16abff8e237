#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frob/numeric.hpp"

namespace frob {

// A = (a_1, ..., a_n): n >= 2, every a_i >= 2, gcd(A) = 1.
class Tuple {
 public:
  explicit Tuple(std::vector<Int> elements);

  static Tuple parse(std::string_view csv);

  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Int& operator[](std::size_t i) const { return elements_[i]; }
  const Int& modulus() const { return elements_.front(); }
  Int min_element() const;
  Int max_element() const;

  // Same set of generators with the smallest one moved to the front.
  Tuple with_min_first() const;

  std::string str() const;

 private:
  std::vector<Int> elements_;
};

// Validation without throwing; returns an empty string when valid.
std::string tuple_problem(const std::vector<Int>& elements);

}  // namespace frob
