#include "frob/grid.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "frob/errors.hpp"

namespace frob {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<GridAxis> parse_grid(std::string_view text) {
  std::vector<GridAxis> axes;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("grid item '" + std::string(item) + "' needs name=lo..hi");
    GridAxis ax;
    ax.name = std::string(trim(item.substr(0, eq)));
    auto range = trim(item.substr(eq + 1));
    auto dots = range.find("..");
    if (dots == std::string_view::npos) {
      ax.lo = ax.hi = parse_int(range);
    } else {
      ax.lo = parse_int(trim(range.substr(0, dots)));
      ax.hi = parse_int(trim(range.substr(dots + 2)));
    }
    if (ax.name.empty()) throw DomainError("grid axis without a name");
    if (ax.lo > ax.hi) throw DomainError("grid axis '" + ax.name + "' has an empty range");
    for (const auto& other : axes)
      if (other.name == ax.name) throw DomainError("grid axis '" + ax.name + "' given twice");
    axes.push_back(std::move(ax));
  }
  return axes;
}

std::vector<std::map<std::string, Int>> grid_points(const std::vector<GridAxis>& axes) {
  std::vector<std::map<std::string, Int>> out;
  for (const auto& ax : axes)
    if (ax.lo > ax.hi) return out;
  std::map<std::string, Int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == axes.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = axes[i].lo; v <= axes[i].hi; ++v) {
      cur[axes[i].name] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace frob
