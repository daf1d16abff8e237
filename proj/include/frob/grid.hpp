#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frob/numeric.hpp"

namespace frob {

struct GridAxis {
  std::string name;
  Int lo, hi;
};

// "a=3..60,h=1..3,d=2" -> axes in the order written.
std::vector<GridAxis> parse_grid(std::string_view text);

// Cartesian product, last axis varying fastest.
std::vector<std::map<std::string, Int>> grid_points(const std::vector<GridAxis>& axes);

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace frob
