#include "frob/ob.hpp"

#include <algorithm>
#include <limits>

#include "frob/errors.hpp"

namespace frob {

namespace {

constexpr std::int64_t kMaxDpTarget = 100'000'000;

struct DpTable {
  std::vector<std::int64_t> value;  // -1 infeasible
  std::vector<std::uint32_t> last;  // index of the last weight used
};

DpTable run_dp(const ObProblem& P, std::int64_t max_M, bool keep_parents) {
  if (max_M > kMaxDpTarget) throw ResourceError("O_B dynamic program: target " + std::to_string(max_M) + " too large");
  std::vector<std::int64_t> w;
  for (const auto& b : P.weights) w.push_back(b > max_M ? max_M + 1 : require_int64(b, "O_B weight"));
  DpTable t;
  const auto n = static_cast<std::size_t>(max_M) + 1;
  t.value.assign(n, -1);
  if (keep_parents) t.last.assign(n, 0);
  t.value[0] = 0;
  for (std::size_t x = 1; x < n; ++x) {
    std::int64_t best = -1;
    std::uint32_t arg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > static_cast<std::int64_t>(x)) break;
      const auto prev = t.value[x - static_cast<std::size_t>(w[i])];
      if (prev >= 0 && (best < 0 || prev + 1 < best)) {
        best = prev + 1;
        arg = static_cast<std::uint32_t>(i);
      }
    }
    t.value[x] = best;
    if (keep_parents) t.last[x] = arg;
  }
  return t;
}

void require(bool ok, const std::string& family, const std::string& constraint) {
  if (!ok) throw PreconditionError("O_B family " + family + ": constraint " + constraint + " violated");
}

std::vector<Int> int_range(const Int& lo, const Int& hi, const Int& step = 1) {
  std::vector<Int> out;
  for (Int v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

// c coins drawn from {lo, lo+step, ..., hi} with total M; requires c*lo <= M <= c*hi
// and step | M - c*lo. Returns multiplicities indexed like the weight list.
std::vector<Int> spread(const Int& c, const Int& lo, const Int& hi, const Int& step, const Int& M) {
  const auto slots = static_cast<std::size_t>(Int((hi - lo) / step).get_ui()) + 1;
  std::vector<Int> x(slots, Int(0));
  if (c == 0) return x;
  Int extra = (M - c * lo) / step;  // increments to hand out
  const Int per = (hi - lo) / step;
  Int full = per == 0 ? Int(0) : Int(extra / per);
  Int rest = per == 0 ? Int(0) : Int(extra % per);
  Int low_coins = c - full - (rest > 0 ? 1 : 0);
  x.back() += full;
  if (rest > 0) x[static_cast<std::size_t>(rest.get_ui())] += 1;
  x.front() += low_coins;
  return x;
}

}  // namespace

void validate(const ObProblem& P) {
  if (P.weights.empty()) throw DomainError("O_B: B must be nonempty");
  if (P.is_signed) {
    if (P.weights != std::vector<Int>{Int(-1), Int(1)}) throw DomainError("O_B: signed mode supports only B = (-1, 1)");
    return;
  }
  for (std::size_t i = 0; i < P.weights.size(); ++i) {
    if (P.weights[i] < 1) throw DomainError("O_B: weights must be >= 1");
    if (i && P.weights[i] <= P.weights[i - 1]) throw DomainError("O_B: weights must be strictly increasing");
  }
}

ObSolution ob_general(const ObProblem& P, const Int& M) {
  validate(P);
  if (P.is_signed) throw DomainError("O_B: the DP handles unsigned problems only; use the PlusMinus closed form");
  if (M < 0) throw DomainError("O_B: M must be nonnegative");
  const auto m = require_int64(M, "O_B target");
  auto t = run_dp(P, m, true);
  ObSolution sol;
  sol.witness.assign(P.weights.size(), Int(0));
  if (t.value[static_cast<std::size_t>(m)] < 0) {
    sol.witness.clear();
    return sol;
  }
  sol.value = Int(static_cast<long>(t.value[static_cast<std::size_t>(m)]));
  for (std::int64_t x = m; x > 0;) {
    const auto i = t.last[static_cast<std::size_t>(x)];
    sol.witness[i] += 1;
    x -= P.weights[i].get_si();
  }
  return sol;
}

std::vector<std::int64_t> ob_values(const ObProblem& P, std::int64_t max_M) {
  validate(P);
  if (P.is_signed) throw DomainError("O_B: the DP handles unsigned problems only");
  return run_dp(P, max_M, false).value;
}

std::string to_string(ObFamily f) {
  switch (f) {
    case ObFamily::OneJ: return "(1,j)";
    case ObFamily::OneTwoJ: return "(1,2,j)";
    case ObFamily::OneAAPlusOne: return "(1,a,a+1)";
    case ObFamily::Prefix: return "(1,...,k)";
    case ObFamily::Truncated: return "(K+1,...,k)";
    case ObFamily::OddSteps: return "(1,3,...,2k+1)";
    case ObFamily::EvenSteps: return "(1,2,4,...,2k)";
    case ObFamily::PlusMinus: return "(-1,1)";
  }
  return "?";
}

ObProblem ob_problem(const ObFamilyParams& F) {
  const std::string name = to_string(F.family);
  switch (F.family) {
    case ObFamily::OneJ:
      require(F.j >= 2, name, "j >= 2");
      return {{1, F.j}, false};
    case ObFamily::OneTwoJ:
      require(F.j >= 3, name, "j >= 3");
      return {{1, 2, F.j}, false};
    case ObFamily::OneAAPlusOne:
      require(F.a >= 2, name, "a >= 2");
      return {{1, F.a, F.a + 1}, false};
    case ObFamily::Prefix:
      require(F.k >= 1, name, "k >= 1");
      return {int_range(1, F.k), false};
    case ObFamily::Truncated:
      require(F.K >= 1, name, "K >= 1");
      require(2 * F.K <= F.k - 1, name, "2K <= k-1");
      return {int_range(F.K + 1, F.k), false};
    case ObFamily::OddSteps:
      require(F.k >= 1, name, "k >= 1");
      return {int_range(1, 2 * F.k + 1, 2), false};
    case ObFamily::EvenSteps: {
      require(F.k >= 1, name, "k >= 1");
      auto w = int_range(2, 2 * F.k, 2);
      w.insert(w.begin(), 1);
      return {w, false};
    }
    case ObFamily::PlusMinus:
      return {{-1, 1}, true};
  }
  throw DomainError("unknown O_B family");
}

ObSolution ob_closed_form(const ObFamilyParams& F, const Int& M) {
  const ObProblem P = ob_problem(F);
  if (!P.is_signed && M < 0) throw DomainError("O_B: M must be nonnegative");
  ObSolution sol;
  switch (F.family) {
    case ObFamily::OneJ: {
      const Int s = floor_div(M, F.j), r1 = M - F.j * s;
      sol.value = r1 + s;
      sol.witness = {r1, s};
      break;
    }
    case ObFamily::OneTwoJ: {
      const Int s = floor_div(M, F.j), r1 = M - F.j * s;
      sol.value = s + ceil_div(r1, 2);
      sol.witness = {r1 % 2, r1 / 2, s};
      break;
    }
    case ObFamily::OneAAPlusOne: {
      const Int& a = F.a;
      const Int q = floor_div(M, a + 1), r1 = M - (a + 1) * q;
      if (r1 != 0 && M >= a * (q + 1)) {
        sol.value = 1 + q;
        sol.witness = {0, a - r1 + 1, q - a + r1};
      } else {
        sol.value = M - a * q;
        sol.witness = {r1, 0, q};
      }
      break;
    }
    case ObFamily::Prefix: {
      const Int q = floor_div(M, F.k), r = M - F.k * q;
      sol.value = ceil_div(M, F.k);
      sol.witness.assign(P.weights.size(), Int(0));
      sol.witness.back() += q;
      if (r > 0) sol.witness[static_cast<std::size_t>(r.get_ui()) - 1] += 1;
      break;
    }
    case ObFamily::Truncated: {
      if (M == 0) {
        sol.value = 0;
        sol.witness.assign(P.weights.size(), Int(0));
      } else if (M <= F.K) {
        return sol;  // no coin is small enough
      } else {
        const Int s = floor_div(M - 1, F.k);
        sol.value = s + 1;
        sol.witness = spread(s + 1, F.K + 1, F.k, 1, M);
      }
      break;
    }
    case ObFamily::OddSteps: {
      Int c = ceil_div(M, 2 * F.k + 1);
      if (mod_floor(c - M, 2) != 0) c += 1;
      sol.value = c;
      sol.witness = spread(c, 1, 2 * F.k + 1, 2, M);
      break;
    }
    case ObFamily::EvenSteps: {
      const Int ones = mod_floor(M, 2);
      const Int c = ceil_div(M - ones, 2 * F.k);
      sol.value = ones + c;
      auto evens = spread(c, 2, 2 * F.k, 2, M - ones);
      sol.witness = {ones};
      sol.witness.insert(sol.witness.end(), evens.begin(), evens.end());
      break;
    }
    case ObFamily::PlusMinus: {
      sol.value = abs(M);
      sol.witness = {M < 0 ? Int(-M) : Int(0), M > 0 ? M : Int(0)};
      break;
    }
  }
  return sol;
}

std::int64_t default_m_cap(const Int& a, const ObProblem& B) {
  Int mx = 0;
  for (const auto& b : B.weights) mx = std::max(mx, Int(abs(b)));
  return 2 + require_int64(ceil_div(mx, a) * Int(static_cast<unsigned long>(B.weights.size())), "m_cap");
}

NdrResult ndr_via_reduction(const Int& a, const Int& h, const Int& d, const ObProblem& B, const Int& r,
                            std::optional<std::int64_t> m_cap) {
  validate(B);
  if (a < 1) throw DomainError("ndr: a must be positive");
  if (h < 1) throw DomainError("ndr: h must be >= 1");
  if (gcd(a, d) != 1) throw DomainError("ndr: gcd(a, d) must be 1");
  if (r < 0 || r >= a) throw DomainError("ndr: residue must lie in [0, a)");
  const std::int64_t cap = m_cap ? *m_cap : default_m_cap(a, B);
  if (cap < 0) throw DomainError("ndr: m_cap must be nonnegative");

  auto n_of = [&](const Int& O, const Int& M) -> Int { return h * a * O + M * d; };

  NdrResult res;
  if (B.is_signed) {
    std::vector<Int> vals;
    for (std::int64_t m = -cap; m <= cap; ++m) {
      const Int M = Int(static_cast<long>(m)) * a + r;
      vals.push_back(n_of(abs(M), M));
    }
    auto it = std::min_element(vals.begin(), vals.end());
    const auto at = static_cast<std::size_t>(it - vals.begin());
    res.value = *it;
    res.argmin_m = Int(static_cast<long>(at)) - cap;
    for (std::size_t i = at + 1; i < vals.size(); ++i) res.monotone = res.monotone && vals[i] >= vals[i - 1];
    for (std::size_t i = at; i-- > 0;) res.monotone = res.monotone && vals[i] >= vals[i + 1];
    return res;
  }

  const Int top = Int(static_cast<long>(cap)) * a + r;
  const auto table = ob_values(B, require_int64(top, "ndr scan range"));
  bool found = false;
  Int prev;
  for (std::int64_t m = 0; m <= cap; ++m) {
    const Int M = Int(static_cast<long>(m)) * a + r;
    const auto O = table[static_cast<std::size_t>(M.get_si())];
    if (O < 0) continue;
    const Int N = n_of(Int(static_cast<long>(O)), M);
    if (found && N < prev) res.monotone = false;
    if (!found || N < res.value) {
      res.value = N;
      res.argmin_m = m;
    }
    found = true;
    prev = N;
  }
  if (!found)
    throw UnresolvedError("ndr: every m up to m_cap = " + std::to_string(cap) + " is infeasible; raise m_cap");
  return res;
}

}  // namespace frob
