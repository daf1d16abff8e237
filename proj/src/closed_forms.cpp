#include "frob/closed_forms.hpp"

#include <algorithm>

#include "frob/errors.hpp"
#include "frob/nr_engine.hpp"

namespace frob {

namespace {

using Q = Rational;

Q fr(const Int& n, const Int& d) { return make_rational(n, d); }

bool even(const Int& v) { return mod_floor(v, 2) == 0; }

void require(bool ok, std::string_view family, std::string_view constraint) {
  if (!ok)
    throw PreconditionError("family " + std::string(family) + ": constraint " + std::string(constraint) +
                            " violated");
}

void require_hd(std::string_view family, const Int& h, const Int& d) {
  require(h >= 1, family, "h >= 1");
  require(d >= 1, family, "d >= 1");
}

StatBundle start(std::vector<Int> tuple) {
  if (auto why = tuple_problem(tuple); !why.empty())
    throw PreconditionError("induced tuple is invalid: " + why);
  StatBundle b;
  b.tuple = std::move(tuple);
  b.engine = "closed-form";
  return b;
}

std::vector<Int> arithmetic_tail(const Int& a, const Int& h, const Int& d, const Int& from, const Int& to,
                                 const Int& step = 1) {
  std::vector<Int> out{a};
  for (Int i = from; i <= to; i += step) out.push_back(h * a + i * d);
  return out;
}

// s_mu for mu = 1..max_mu from power sums P(p) = sum_r N_r^p.
template <class PowerSum>
void fill_s_mu(StatBundle& b, const Int& a, unsigned max_mu, PowerSum P) {
  if (max_mu == 0) return;
  std::vector<Int> sums(max_mu + 2);
  for (unsigned p = 1; p <= max_mu + 1; ++p) sums[p] = P(p);
  for (unsigned mu = 1; mu <= max_mu; ++mu) b.s_mu[mu] = s_mu_from_power_sums(a, sums, mu);
}

const std::vector<std::string> kAHD = {"a", "h", "d"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<const char*> more) {
  for (auto m : more) base.emplace_back(m);
  return base;
}

}  // namespace

const Int& FamilySpec::at(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw DomainError("family " + std::string(family_name(tag)) + ": missing parameter " + name);
  return it->second;
}

std::string FamilySpec::str() const {
  std::string s(family_name(tag));
  for (const auto& p : family_info(tag).params) {
    auto it = params.find(p);
    if (it != params.end()) s += " " + p + "=" + to_string(it->second);
  }
  return s;
}

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> reg = {
      {FamilyTag::Scale, "scale", {"a", "d", "b1", "b2"}, "(a, d*b1, d*b2)", "g", false},
      {FamilyTag::Aj, "aj", with(kAHD, {"j"}), "(a, ha+d, ha+jd)", "g,n,s", true},
      {FamilyTag::A2j, "a2j", with(kAHD, {"j"}), "(a, ha+d, ha+2d, ha+jd)", "g,n,s", true},
      {FamilyTag::Square, "square", kAHD, "(a^2, ha^2+d, ha^2+ad, ha^2+(a+1)d)", "g,n,s", true},
      {FamilyTag::Pm, "pm", kAHD, "(a, ha-d, ha+d)", "g,n,s,s_mu", true},
      {FamilyTag::Arith, "arith", with(kAHD, {"k"}), "(a, ha+d, ..., ha+kd)", "g,n,s,s_mu", true},
      {FamilyTag::TruncArith, "trunc-arith", with(kAHD, {"K", "k"}), "(a, ha+(K+1)d, ..., ha+kd)", "g,n", true},
      {FamilyTag::OddSteps, "odd-steps", with(kAHD, {"k"}), "(a, ha+d, ha+3d, ..., ha+(2k+1)d)", "g,n", true},
      {FamilyTag::EvenSteps, "even-steps", with(kAHD, {"k"}), "(a, ha+d, ha+2d, ha+4d, ..., ha+2kd)", "g,n", true},
  };
  return reg;
}

const FamilyInfo& family_info(FamilyTag tag) {
  for (const auto& f : family_registry())
    if (f.tag == tag) return f;
  throw DomainError("unknown family tag");
}

FamilyTag parse_family(std::string_view name) {
  for (const auto& f : family_registry())
    if (f.name == name) return f.tag;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(FamilyTag tag) { return family_info(tag).name; }

Int scale_g(const Int& a, const Int& d, const std::vector<Int>& B) {
  require(d >= 1, "scale", "d >= 1");
  std::vector<Int> scaled{a}, base{a};
  for (const auto& b : B) {
    require(b >= 2, "scale", "b_i >= 2");
    base.push_back(b);
    scaled.push_back(d * b);
  }
  require(tuple_problem(scaled).empty(), "scale", "gcd(a, dB) = 1 with every element >= 2");
  const auto T = compute_nr(Tuple(base));
  return d * (T.max_value() - a) + (d - 1) * a;
}

StatBundle family_aj(const Int& a, const Int& h, const Int& d, const Int& j) {
  constexpr std::string_view F = "aj";
  require(a > 2, F, "a > 2");
  require(j > 2, F, "j > 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(h >= d, F, "h >= d");
  const Int k = ceil_div(a, j), t = k * j - a;
  require(h * k + d - h * t >= 0, F, "hk + d - ht >= 0");

  StatBundle b = start({a, h * a + d, h * a + j * d});
  if (t == 0) b.g = exact_integer(fr(h * a * a, j) + (j - 2) * h * a + (a - 1) * d - a, "aj g");
  else if (t == 1) b.g = exact_integer(fr(h * a * (a + 1), j) + (j - 3) * h * a + (a - 1) * d - a, "aj g");
  else {
    b.g = floor_div(a, j) * (h * a + j * d) + (j - 2) * h * a - d - a;
    b.notes.push_back("case t >= 2 relies on h >= d");
  }
  const Q tail = fr(h * (j - 1) * (a - t), 2) * (fr(a + t, j) - 1);
  b.n = exact_integer(fr((a - 1) * (h * a + d - 1), 2) - tail, "aj n");
  const Int u = h * a + d;
  Q s = fr(u * u * (2 * a * a - 3 * a + 1), 12);
  s += fr(h * h * a * (j - 1) * (j - 1) * (k - 1), 6) * (j * k * k - fr(j * k, 2) - 3 * t * k + 3 * t);
  s -= fr(h * u * (j - 1) * (k - 1), 6) *
       (2 * j * j * (k * k + fr(k, 4)) - 2 * k * j * (3 * t + fr(3, 4)) + 3 * t * (t + 1));
  s -= fr(a * u * (a - 1), 4);
  s += fr(h * a * (j - 1) * (a - t), 4) * (fr(a + t, j) - 1);
  s += fr(a * a - 1, 12);
  b.s = exact_integer(s, "aj s");
  return b;
}

namespace {

Int a2j_sum(const Int& a, const Int& h, const Int& d, const Int& j, const Int& k, const Int& t) {
  const Int a2 = a * a, a3 = a2 * a, h2 = h * h, d2 = d * d;
  const Int j2 = j * j, j3 = j2 * j, k2 = k * k, k3 = k2 * k, t2 = t * t, t3 = t2 * t;
  const Int P =
      a2 * h2 * j3 * k + 3 * a2 * h2 * j2 * k2 + 4 * a2 * h2 * j * k3 + 3 * a * d * h * j3 * k2 +
      8 * a * d * h * j2 * k3 + 4 * d2 * j3 * k3 - 3 * j2 * a2 * h2 * k - 3 * a2 * h2 * j2 * t -
      6 * a2 * h2 * j * k2 - 12 * a2 * h2 * j * k * t + 3 * a2 * h2 * j * t2 - 12 * a2 * h2 * k2 * t +
      6 * a2 * h2 * k * t2 - a2 * h2 * t3 + a * d * h * j3 * k - 6 * a * d * h * j2 * k2 -
      12 * a * d * h * j2 * k * t - 24 * a * d * h * j * k2 * t + 6 * a * d * h * j * k * t2 -
      12 * d2 * j2 * k2 * t + 12 * a2 * h2 * j * t + 24 * a2 * h2 * k * t - 6 * a2 * h2 * t2 -
      3 * a2 * h * j2 * k - 6 * a2 * h * j * k2 - 5 * a * d * h * j2 * k + 24 * a * d * h * j * k * t +
      6 * a * d * h * j * t2 + 12 * a * d * h * k * t2 - 4 * a * d * h * t3 - 6 * a * d * j2 * k2 -
      6 * d2 * j2 * k2 + 12 * d2 * j * k * t2 + 6 * a2 * h * j * k + 6 * a2 * h * j * t + 12 * a2 * h * k * t -
      3 * a2 * h * t2 + 6 * a * d * h * j * t + 12 * a * d * h * k * t - 15 * a * d * h * t2 +
      12 * a * d * j * k * t + 12 * d2 * j * k * t - 4 * d2 * t3 - 12 * a2 * h * t + 6 * a * d * j * k -
      6 * a * d * t2 + 2 * d2 * j * k - 6 * d2 * t2 + 2 * a3 - 6 * a * d * t - 2 * d2 * t - 2 * a;
  Int tilde;
  const bool je = even(j - 1), te = even(t);
  if (je && te)
    tilde = j * a2 * h2 * k - 3 * a2 * h2 * k2 - 9 * a * d * h * j * k2 + 3 * a2 * h2 * k - 11 * a2 * h2 * t +
            5 * a * d * h * j * k + 3 * a2 * h * k + 3 * a * d * h * k - 8 * a * d * h * t;
  else if (je)
    tilde = j * a2 * h2 * k - 3 * a2 * h2 * k2 - 9 * a * d * h * j * k2 + 3 * a2 * h2 * j + 9 * a2 * h2 * k -
            14 * a2 * h2 * t + 11 * a * d * h * j * k - 6 * a2 * h2 + 3 * a2 * h * k + 3 * a * d * h * k -
            14 * a * d * h * t - 3 * a2 * h - 3 * a * d * h;
  else if (!te)
    tilde = 4 * j * a2 * h2 * k - 6 * a * d * h * j * k2 - 3 * a2 * h2 * j - 6 * a2 * h2 * k - 11 * a2 * h2 * t +
            2 * a * d * h * j * k + 6 * a2 * h2 - 8 * a * d * h * t + 3 * a2 * h + 3 * a * d * h;
  else
    tilde = 4 * j * a2 * h2 * k - 6 * a * d * h * j * k2 - 14 * a2 * h2 * t + 8 * a * d * h * j * k -
            14 * a * d * h * t;
  return exact_integer(fr(P + tilde, 24 * a), "a2j s");
}

}  // namespace

StatBundle family_a2j(const Int& a, const Int& h, const Int& d, const Int& j) {
  constexpr std::string_view F = "a2j";
  require(j >= 4, F, "j >= 4");
  require(a >= 2, F, "a >= 2");
  require_hd(F, h, d);
  require(h >= d, F, "h >= d");
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  const Int k = ceil_div(a, j), t = k * j - a;
  const Int slack = k + 1 - ceil_div(t, 2);
  require(slack >= 0, F, "k + 1 - ceil(t/2) >= 0");
  // At slack == 0 the formulas only hold when h == d (see README).
  require(slack > 0 || h == d, F, "k >= ceil(t/2) unless h = d");

  StatBundle b = start({a, h * a + d, h * a + 2 * d, h * a + j * d});
  b.notes.push_back(slack > 0 ? "guard: k >= ceil(t/2) (strict variant)"
                              : "guard: k + 1 - ceil(t/2) = 0 boundary, admitted because h = d");
  const Int s0 = floor_div(a - 1, j), r0 = a - 1 - j * s0;
  const Int c1 = h * a * (s0 + ceil_div(r0, 2)) + (a - 1) * d - a;
  const Int c2 = h * a * (s0 + ceil_div(j - 1, 2) - 1) + (j * s0 - 1) * d - a;
  b.g = std::max(c1, c2);

  Q n = fr((a - 1) * (d - 1), 2) + fr(h * (k - 1), 2) * (j * k - 2 * t);
  const bool je = even(j - 1), te = even(t);
  if (je) n += fr(h * (j - 1) * (j + 1) * (k - 1), 4);
  else n += fr(h * j * j * (k - 1), 4);
  if (je == te) n += fr(h * (j - t - 1) * (j - t + 1), 4);
  else n += fr(h * (j - t) * (j - t), 4);
  b.n = exact_integer(n, "a2j n");
  b.s = a2j_sum(a, h, d, j, k, t);
  return b;
}

StatBundle family_square(const Int& a, const Int& h, const Int& d) {
  constexpr std::string_view F = "square";
  require(a > 1, F, "a > 1");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  const Int a2 = a * a;
  StatBundle b = start({a2, h * a2 + d, h * a2 + a * d, h * a2 + (a + 1) * d});
  b.g = h * a2 * a + (d - h - 1) * a2 - d;
  b.n = exact_integer(fr(2, 3) * h * a2 * a + fr(1, 2) * (d - h - 1) * a2 - fr(1, 6) * h * a + fr(1 - d, 2), "square n");
  const Int a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
  const Int num = 6 * h * h * a6 + (9 * d * h - 8 * h * h - 8 * h) * a5 +
                  (4 * d * d - 5 * d * h - 6 * d + 6 * h + 2) * a4 + (2 * h * h - 11 * d * h + 2 * h) * a3 +
                  (5 * d * h - 6 * d * d + 6 * d) * a2 + 2 * d * h * a + 2 * d * d - 2;
  b.s = exact_integer(fr(num, 24), "square s");
  return b;
}

Int power_sum_below(const Int& n, unsigned p) {
  Q acc = 0;
  for (unsigned j = 0; j <= p; ++j) acc += binomial(Int(p + 1), j) * bernoulli(j) * ipow(n, p + 1 - j);
  return exact_integer(acc / Q(Int(p + 1)), "power sum");
}

StatBundle family_pm(const Int& a, const Int& h, const Int& d, unsigned max_mu) {
  constexpr std::string_view F = "pm";
  require(a >= 2, F, "a >= 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(h * a - d > 1, F, "ha - d > 1");
  StatBundle b = start({a, h * a - d, h * a + d});
  const Int s = floor_div(h * a - d, 2 * h);
  const Int up = h * a + d, down = h * a - d;
  b.g = std::max(Int(s * up - a), Int((a - ceil_div(down, 2 * h)) * down - a));
  b.n = exact_integer(fr(up, 2 * a) * s * (s + 1) + fr(down, 2 * a) * (a - s) * (a - s - 1) - fr(a - 1, 2), "pm n");
  const Q S = (fr(up * up * (2 * s + 1), 12 * a) - fr(up, 4)) * s * (s + 1) +
              (fr(down * down * (2 * a - 2 * s - 1), 12 * a) - fr(down, 4)) * (a - s) * (a - s - 1) +
              fr(a * a - 1, 12);
  b.s = exact_integer(S, "pm s");
  // N_dr = (ha+d) r for r <= s and (ha-d)(a-r) beyond.
  fill_s_mu(b, a, max_mu, [&](unsigned p) -> Int {
    return ipow(up, p) * power_sum_below(s + 1, p) + ipow(down, p) * power_sum_below(a - s, p);
  });
  return b;
}

StatBundle family_arith(const Int& a, const Int& h, const Int& d, const Int& k, unsigned max_mu) {
  constexpr std::string_view F = "arith";
  require(a >= 2, F, "a >= 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(k >= 1 && k <= a - 1, F, "1 <= k <= a-1");
  StatBundle b = start(arithmetic_tail(a, h, d, 1, k));
  b.g = h * a * (floor_div(a - 2, k) + 1) + (d - 1) * (a - 1) - 1;
  const Int s = floor_div(a - 1, k), r1 = a - 1 - s * k;
  b.n = exact_integer(h * (s + 1) * (a - 1 - fr(k, 2) * s) + fr((d - 1) * (a - 1), 2), "arith n");
  Q S = fr(a * (s + 1) * h * h, 6) * (k * s * s + fr(k * s, 2) + 3 * s * r1 + 3 * r1);
  S += fr((a - 1) * (d - 1), 6) * (a * d - fr(d, 2) - fr(a, 2) - fr(1, 2));
  S -= fr(h * (s + 1), 4) *
       (-fr(4, 3) * d * k * k * s * s + (fr(k * d, 3) - 4 * d * r1 - d + a) * k * s + 2 * r1 * (-r1 * d - d + a));
  b.s = exact_integer(S, "arith s");
  fill_s_mu(b, a, max_mu, [&](unsigned p) -> Int {
    Int acc = 0;
    for (Int r = 1; r <= a - 1; ++r) acc += ipow(h * a * ceil_div(r, k) + d * r, p);
    return acc;
  });
  return b;
}

StatBundle family_trunc_arith(const Int& a, const Int& h, const Int& d, const Int& K, const Int& k) {
  constexpr std::string_view F = "trunc-arith";
  require(a >= 2, F, "a >= 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(K >= 1, F, "K >= 1");
  require(2 * K <= k - 1, F, "K <= (k-1)/2");
  require(K <= a - 1, F, "K <= a-1");
  StatBundle b = start(arithmetic_tail(a, h, d, K + 1, k));
  const Int q = floor_div(a + K, k), r1 = a + K - q * k;
  b.g = h * a * ceil_div(a + K, k) + d * (a + K) - a;
  Q n = fr((a - 1) * (d - 1), 2) + K * d;
  if (r1 >= K + 1) n += h * ((q + 1) * (fr(q * k, 2) + r1 - 1) - K);
  else n += h * ((q + 1) * (fr(q * k, 2) + r1) - K - q);
  b.n = exact_integer(n, "trunc-arith n");
  return b;
}

StatBundle family_odd_steps(const Int& a, const Int& h, const Int& d, const Int& k) {
  constexpr std::string_view F = "odd-steps";
  require(a > 2, F, "a > 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(k >= 1 && 2 * k + 1 <= a - 1, F, "3 <= 2k+1 <= a-1");
  std::vector<Int> A{a, h * a + d};
  for (Int i = 1; i <= k; ++i) A.push_back(h * a + (2 * i + 1) * d);
  StatBundle b = start(A);
  const Int m = 2 * k + 1;
  const Int s = floor_div(a - 2, m), t = a - 1 - m * s;
  if (even(t)) b.g = h * a * (s + 2) + (a - 1) * d - a;
  else b.g = std::max(Int(h * a * (s + 1) + (a - 1) * d - a), Int(h * a * (floor_div(a - 3, m) + 2) + (a - 2) * d - a));
  b.n = exact_integer(h * s * (k * s + t + fr(s, 2) - fr(1, 2)) + (a - 1) * (fr(d, 2) + h - fr(1, 2)) + h * floor_div(t, 2),
                      "odd-steps n");
  return b;
}

StatBundle family_even_steps(const Int& a, const Int& h, const Int& d, const Int& k) {
  constexpr std::string_view F = "even-steps";
  require(a > 2, F, "a > 2");
  require_hd(F, h, d);
  require(gcd(a, d) == 1, F, "gcd(a, d) = 1");
  require(k >= 1 && 2 * k <= a - 1, F, "2 <= 2k <= a-1");
  std::vector<Int> A{a, h * a + d};
  for (Int i = 1; i <= k; ++i) A.push_back(h * a + 2 * i * d);
  StatBundle b = start(A);
  const Int m = 2 * k;
  if (even(a)) {
    const Int t = a - 1 - m * floor_div(a - 2, m);
    if (t != 1) b.g = h * a * (floor_div(a - 2, m) + 2) + (a - 1) * d - a;
    else b.g = exact_integer(h * a * (fr(a - 2, m) + 1) + (a - 1) * d - a, "even-steps g");
  } else {
    const Int t = a - 2 - m * floor_div(a - 3, m);
    if (t != 1)
      b.g = std::max(Int(h * a * (floor_div(a - 2, m) + 1) + (a - 1) * d - a),
                     Int(h * a * (floor_div(a - 3, m) + 2) + (a - 2) * d - a));
    else b.g = h * a * (floor_div(a - 2, m) + 1) + (a - 1) * d - a;
  }
  const Int s = floor_div(a - 2, m), t = a - 1 - m * s;
  b.n = exact_integer(h * (s * s * k + s * t - s - 1) + (a - 1) * (h + fr(d, 2) - fr(1, 2)) + h * ceil_div(t, 2),
                      "even-steps n");
  return b;
}

Int g_sa_family(const Int& a, const Int& s) {
  require(a >= 2, "sa", "a >= 2");
  require(s >= 1, "sa", "s >= 1");
  return a * s * (a + s - 2) - 1;
}

Int g_unit_a2j(const Int& a, int j) {
  auto f = [&](long off, long den) { return floor_div(a + off, den); };
  switch (j) {
    case 4: return (a + 1) * f(0, 4) + f(1, 4) + 2 * f(2, 4) - 1;
    case 5: return a * f(1, 5) + f(0, 5) + f(1, 5) + f(2, 5) + 2 * f(3, 5) - 1;
    case 6: return a * f(0, 6) + 2 * f(0, 6) + 2 * f(1, 6) + 5 * f(2, 6) + f(3, 6) + f(4, 6) + f(5, 6) - 1;
    default: throw DomainError("g_unit_a2j: j must be 4, 5 or 6");
  }
}

Tuple family_tuple(const FamilySpec& spec) {
  if (spec.tag == FamilyTag::Scale) {
    const Int &a = spec.at("a"), &d = spec.at("d");
    std::vector<Int> A{a, d * spec.at("b1"), d * spec.at("b2")};
    scale_g(a, d, {spec.at("b1"), spec.at("b2")});  // guards
    return Tuple(A);
  }
  return Tuple(evaluate_family(spec, 0).tuple);
}

StatBundle evaluate_family(const FamilySpec& spec, unsigned max_mu) {
  auto p = [&](const char* n) -> const Int& { return spec.at(n); };
  switch (spec.tag) {
    case FamilyTag::Scale: {
      StatBundle b = start({p("a"), p("d") * p("b1"), p("d") * p("b2")});
      b.g = scale_g(p("a"), p("d"), {p("b1"), p("b2")});
      return b;
    }
    case FamilyTag::Aj: return family_aj(p("a"), p("h"), p("d"), p("j"));
    case FamilyTag::A2j: return family_a2j(p("a"), p("h"), p("d"), p("j"));
    case FamilyTag::Square: return family_square(p("a"), p("h"), p("d"));
    case FamilyTag::Pm: return family_pm(p("a"), p("h"), p("d"), max_mu);
    case FamilyTag::Arith: return family_arith(p("a"), p("h"), p("d"), p("k"), max_mu);
    case FamilyTag::TruncArith: return family_trunc_arith(p("a"), p("h"), p("d"), p("K"), p("k"));
    case FamilyTag::OddSteps: return family_odd_steps(p("a"), p("h"), p("d"), p("k"));
    case FamilyTag::EvenSteps: return family_even_steps(p("a"), p("h"), p("d"), p("k"));
  }
  throw DomainError("unknown family");
}

}  // namespace frob
