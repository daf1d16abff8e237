#include "frob/numeric.hpp"

#include <vector>

#include "frob/errors.hpp"

namespace frob {

namespace {

constexpr std::size_t kMemoLimit = 64;

// Extend b (holding B_0..B_{m-1}) up to B_n via sum_{k=0}^{n} C(n+1,k) B_k = 0.
void extend_bernoulli(std::vector<Rational>& b, std::size_t n) {
  if (b.empty()) b.push_back(Rational(1));
  while (b.size() <= n) {
    const std::size_t m = b.size();
    Rational acc = 0;
    Int c = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += c * b[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    Rational next = -acc / Rational(Int(m + 1));
    next.canonicalize();
    b.push_back(next);
  }
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b;
    extend_bernoulli(b, kMemoLimit);
    return b;
  }();
  return table;
}

using Triangle = std::vector<std::vector<Int>>;

// Rows 0..n of a Stirling triangle given the row recurrence.
template <class Step>
Triangle build_triangle(std::size_t n, Step step) {
  Triangle t(n + 1);
  t[0] = {Int(1)};
  for (std::size_t p = 1; p <= n; ++p) {
    t[p].assign(p + 1, Int(0));
    for (std::size_t k = 1; k <= p; ++k) {
      const Int& same = k < p ? t[p - 1][k] : Int(0);
      t[p][k] = step(p, k, same, t[p - 1][k - 1]);
    }
  }
  return t;
}

Int s2_step(std::size_t, std::size_t k, const Int& same, const Int& left) {
  return Int(k) * same + left;
}

Int s1_step(std::size_t p, std::size_t, const Int& same, const Int& left) {
  return left - Int(p - 1) * same;
}

const Triangle& stirling2_table() {
  static const Triangle t = build_triangle(kMemoLimit, s2_step);
  return t;
}

const Triangle& stirling1_table() {
  static const Triangle t = build_triangle(kMemoLimit, s1_step);
  return t;
}

}  // namespace

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return Rational(1) / rpow(base, -e);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
             ipow(base.get_den(), static_cast<unsigned long>(e)));
  return r;  // already reduced: powers of coprime parts stay coprime
}

Int factorial(std::size_t n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& n, std::size_t k) {
  return falling_factorial(n, k) / factorial(k);
}

Rational bernoulli(std::size_t n) {
  const auto& table = bernoulli_table();
  if (n < table.size()) return table[n];
  if (n % 2 == 1) return Rational(0);
  std::vector<Rational> b = table;
  extend_bernoulli(b, n);
  return b[n];
}

Int stirling2(std::size_t p, std::size_t k) {
  if (k > p) return 0;
  if (p <= kMemoLimit) return stirling2_table()[p][k];
  return build_triangle(p, s2_step)[p][k];
}

Int stirling1(std::size_t p, std::size_t k) {
  if (k > p) return 0;
  if (p <= kMemoLimit) return stirling1_table()[p][k];
  return build_triangle(p, s1_step)[p][k];
}

Int falling_factorial(const Int& n, std::size_t p) {
  Int r = 1;
  for (std::size_t i = 0; i < p; ++i) r *= n - Int(i);
  return r;
}

Int exact_integer(const Rational& q_in, std::string_view what) {
  Rational q = q_in;
  q.canonicalize();
  if (q.get_den() != 1)
    throw InternalError(std::string(what) + ": expected an integer, got " + to_string(q));
  return q.get_num();
}

std::optional<std::int64_t> to_int64(const Int& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

std::int64_t require_int64(const Int& v, std::string_view what) {
  auto r = to_int64(v);
  if (!r) throw ResourceError(std::string(what) + " does not fit in 64 bits");
  return *r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  Int v;
  if (str.empty() || v.set_str(str, 10) != 0)
    throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace frob
