#include "frob/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "frob/errors.hpp"

namespace frob {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

// Bits [o, o+64) of the bitmap; positions outside the stored range read as 0.
u64 window(const std::vector<u64>& words, std::int64_t o) {
  if (o <= -64) return 0;
  if (o < 0) return words[0] << (-o);
  const auto wi = static_cast<std::size_t>(o / 64);
  const unsigned sh = static_cast<unsigned>(o % 64);
  u64 lo = wi < words.size() ? words[wi] >> sh : 0;
  u64 hi = (sh != 0 && wi + 1 < words.size()) ? words[wi + 1] << (64 - sh) : 0;
  return lo | hi;
}

// Exact sum that stays in 128-bit arithmetic until it would overflow.
class BigSum {
 public:
  void add(i128 v) {
    if (__builtin_add_overflow(fast_, v, &fast_)) {
      flush();
      fast_ = v;
    }
  }
  void add(const Int& v) { slow_ += v; }
  Int total() const {
    Int t = slow_;
    t += to_int(fast_);
    return t;
  }

  static Int to_int(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(static_cast<u64>(u)));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
  }

 private:
  void flush() {
    slow_ += to_int(fast_);
    fast_ = 0;
  }
  i128 fast_ = 0;
  Int slow_ = 0;
};

// acc[p] += v^p for p = 1..P (acc indexed from 1), falling back to GMP on overflow.
void add_powers(std::vector<BigSum>& acc, std::int64_t v) {
  i128 pw = 1;
  bool big = false;
  Int bpw;
  for (std::size_t p = 1; p < acc.size(); ++p) {
    if (!big && __builtin_mul_overflow(pw, static_cast<i128>(v), &pw)) {
      big = true;
      bpw = ipow(Int(static_cast<long>(v)), p);
    } else if (big) {
      bpw *= static_cast<long>(v);
    }
    if (big) acc[p].add(bpw);
    else acc[p].add(pw);
  }
}

// acc[p] += (v)_p, same overflow policy.
void add_falling(std::vector<BigSum>& acc, std::int64_t v) {
  i128 ff = 1;
  bool big = false;
  Int bff;
  for (std::size_t p = 1; p < acc.size(); ++p) {
    const std::int64_t factor = v - static_cast<std::int64_t>(p - 1);
    if (!big && __builtin_mul_overflow(ff, static_cast<i128>(factor), &ff)) {
      big = true;
      bff = falling_factorial(Int(static_cast<long>(v)), p);
    } else if (big) {
      bff *= static_cast<long>(factor);
    }
    if (big) acc[p].add(bff);
    else acc[p].add(ff);
  }
}

constexpr u64 kIndexMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  if (const char* env = std::getenv("FROB_ORACLE_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) l.frobenius_cap = v;
  }
  return l;
}

Int denumerant(const Int& a0, const Tuple& A, const OracleLimits& limits) {
  if (a0 < 0) throw DomainError("denumerant: target must be nonnegative");
  if (a0 > limits.frobenius_cap) throw ResourceError("denumerant: target exceeds the oracle cap");
  const auto n = static_cast<std::size_t>(a0.get_si());
  std::vector<Int> ways(n + 1, Int(0));
  ways[0] = 1;
  for (const auto& e : A.elements()) {
    if (e > a0) continue;
    const auto b = static_cast<std::size_t>(e.get_si());
    for (std::size_t x = b; x <= n; ++x) ways[x] += ways[x - b];
  }
  return ways[n];
}

Representability::Representability(const Tuple& A, const OracleLimits& limits) {
  std::vector<std::int64_t> gens;
  for (const auto& e : A.elements()) gens.push_back(require_int64(e, "oracle generator"));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::int64_t m = gens.front();
  std::vector<unsigned> small;
  for (auto b : gens)
    if (b < 64) small.push_back(static_cast<unsigned>(b));

  std::int64_t run = 0;
  std::int64_t last_gap = -1;
  for (std::int64_t W = 0;; ++W) {
    if (W * 64 > limits.frobenius_cap + m + 64)
      throw ResourceError("oracle cap exceeded: frobenius number above " + std::to_string(limits.frobenius_cap) +
                          " (set FROB_ORACLE_CAP to raise it)");
    words_.push_back(0);
    u64 w = W == 0 ? 1 : 0;
    for (auto b : gens) w |= window(words_, W * 64 - b);
    // Dependencies inside the same word.
    while (!small.empty()) {
      u64 next = w;
      for (auto b : small) next |= w << b;
      if (next == w) break;
      w = next;
    }
    words_.back() = w;
    if (w == ~u64{0}) {
      run += 64;
    } else {
      const int top = std::countl_one(w);
      last_gap = W * 64 + 63 - top;
      run = top;
    }
    if (run >= m) break;
  }
  frobenius_ = last_gap;
  words_.resize(static_cast<std::size_t>(frobenius_ / 64 + 1));
  const unsigned used = static_cast<unsigned>(frobenius_ % 64) + 1;
  if (used < 64) words_.back() |= ~u64{0} << used;
}

bool Representability::representable(std::int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return (words_[static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1;
}

std::int64_t Representability::gap_count() const {
  std::int64_t c = 0;
  for (auto w : words_) c += std::popcount(~w);
  return c;
}

Int Representability::gap_sum() const {
  BigSum total;
  for (std::size_t W = 0; W < words_.size(); ++W) {
    const u64 z = ~words_[W];
    if (!z) continue;
    i128 part = static_cast<i128>(W) * 64 * std::popcount(z);
    for (unsigned b = 0; b < 6; ++b) part += static_cast<i128>(std::popcount(z & kIndexMask[b])) << b;
    total.add(part);
  }
  return total.total();
}

void Representability::for_each_gap(const std::function<void(std::int64_t)>& fn) const {
  for (std::size_t W = 0; W < words_.size(); ++W) {
    u64 z = ~words_[W];
    while (z) {
      fn(static_cast<std::int64_t>(W) * 64 + std::countr_zero(z));
      z &= z - 1;
    }
  }
}

GapSet gap_set(const Tuple& A, const OracleLimits& limits) {
  Representability rep(A, limits);
  GapSet out;
  out.frobenius = rep.frobenius();
  out.members.reserve(static_cast<std::size_t>(rep.gap_count()));
  rep.for_each_gap([&](std::int64_t x) { out.members.push_back(x); });
  return out;
}

StatBundle oracle_stats(const Tuple& A, unsigned max_mu, const std::vector<Rational>& lambdas,
                        const OracleLimits& limits) {
  for (const auto& lam : lambdas)
    if (lam == 0 || lam == 1) throw DomainError("lambda must not be 0 or 1");

  Representability rep(A, limits);
  StatBundle b;
  b.tuple = A.elements();
  b.engine = "oracle";
  b.g = Int(static_cast<long>(rep.frobenius()));
  b.n = Int(static_cast<long>(rep.gap_count()));
  b.s = rep.gap_sum();
  if (max_mu >= 1) {
    b.s_mu[1] = *b.s;
    b.shat_mu[1] = *b.s;
  }

  if (max_mu >= 2) {
    std::vector<BigSum> pows(max_mu + 1), falls(max_mu + 1);
    rep.for_each_gap([&](std::int64_t x) {
      add_powers(pows, x);
      add_falling(falls, x);
    });
    for (unsigned mu = 2; mu <= max_mu; ++mu) {
      b.s_mu[mu] = pows[mu].total();
      b.shat_mu[mu] = falls[mu].total() / factorial(mu);
    }
  }

  // sum lambda^x x^mu = (sum p^x q^(g-x) x^mu) / q^g with lambda = p/q.
  for (const auto& lam : lambdas) {
    const Int p = lam.get_num(), q = lam.get_den();
    const long g = static_cast<long>(rep.frobenius());
    std::vector<Int> acc(max_mu + 1, Int(0));
    Int weight = ipow(q, static_cast<unsigned long>(g));  // p^x q^(g-x) at x = 0
    std::int64_t at = 0;
    rep.for_each_gap([&](std::int64_t x) {
      const auto step = static_cast<unsigned long>(x - at);
      weight = weight * ipow(p, step) / ipow(q, step);
      at = x;
      Int term = weight;
      for (unsigned mu = 0; mu <= max_mu; ++mu) {
        if (mu) term *= static_cast<long>(x);
        acc[mu] += term;
      }
    });
    const Int denom = ipow(q, static_cast<unsigned long>(g));
    auto& slot = b.s_mu_lambda[lam];
    for (unsigned mu = 1; mu <= max_mu; ++mu) slot[mu] = make_rational(acc[mu], denom);
  }
  return b;
}

}  // namespace frob
