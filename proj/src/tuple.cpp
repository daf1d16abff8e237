#include "frob/tuple.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

std::string tuple_problem(const std::vector<Int>& elements) {
  if (elements.size() < 2) return "a tuple needs at least two elements";
  Int g = 0;
  for (const auto& e : elements) {
    if (e < 2) return "element " + to_string(e) + " is below 2";
    g = gcd(g, e);
  }
  if (g != 1) return "gcd of the elements is " + to_string(g) + ", not 1";
  return {};
}

Tuple::Tuple(std::vector<Int> elements) : elements_(std::move(elements)) {
  if (auto why = tuple_problem(elements_); !why.empty()) throw DomainError("invalid tuple: " + why);
}

Tuple Tuple::parse(std::string_view csv) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    auto piece = csv.substr(pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(parse_int(piece));
    pos = comma + 1;
  }
  return Tuple(std::move(out));
}

Int Tuple::min_element() const { return *std::min_element(elements_.begin(), elements_.end()); }
Int Tuple::max_element() const { return *std::max_element(elements_.begin(), elements_.end()); }

Tuple Tuple::with_min_first() const {
  auto e = elements_;
  auto it = std::min_element(e.begin(), e.end());
  std::rotate(e.begin(), it, it + 1);
  return Tuple(std::move(e));
}

std::string Tuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ",";
    s += to_string(elements_[i]);
  }
  return s + ")";
}

}  // namespace frob
