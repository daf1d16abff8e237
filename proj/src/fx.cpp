#include "frob/fx.hpp"

#include <algorithm>

#include "frob/errors.hpp"

namespace frob {

namespace {

using LP = LaurentPoly;

LP mono(const Int& e, const Rational& c = 1) { return LP::monomial(e, c); }
// 1 - x^span
LP one_minus(const Int& span) { return LP::block(0, span); }
// x^start (1 - x^{step*count}) / (1 - x^step)
RationalTerm geo(const Int& start, const Int& step, const Int& count) {
  return RationalTerm(LP::block(start, step * count), {step});
}

void require(bool ok, std::string_view family, std::string_view constraint) {
  if (!ok)
    throw PreconditionError("f(x) for " + std::string(family) + ": constraint " + std::string(constraint) +
                            " violated");
}

RationalTermSum fx_aj(const Int& a, const Int& h, const Int& d, const Int& j) {
  const Int k = ceil_div(a, j), t = k * j - a, u = h * a + d, v = h * a + j * d;
  RationalTermSum S;
  S.add(RationalTerm(one_minus(j * u) * one_minus(v * (k - 1)), {u, v}));
  S.add(geo((k - 1) * v, u, j - t));
  return S;
}

RationalTermSum fx_a2j(const Int& a, const Int& h, const Int& d, const Int& j) {
  const Int k = ceil_div(a, j), t = k * j - a, v = h * a + j * d, w = h * a + 2 * d;
  const Int e1 = k * h * a + ((k - 1) * j + 1) * d, e2 = k * h * a + ((k - 1) * j + 2) * d;
  const bool je = mod_floor(j - 1, 2) == 0, te = mod_floor(t, 2) == 0;
  RationalTermSum S;
  S.add(geo(0, v, k));
  if (je) {
    S.add(RationalTerm(one_minus(w * (j - 1) / 2) * one_minus(v * (k - 1)) * (mono(h * a + d) + mono(h * a + 2 * d)),
                       {w, v}));
  } else {
    LP inner = LP::block(h * a + d, w * j / 2) + LP::block(h * a + 2 * d, w * (j - 2) / 2);
    S.add(RationalTerm(one_minus(v * (k - 1)) * inner, {w, v}));
  }
  if (je == te) {
    S.add(RationalTerm(one_minus(w * (j - t - 1) / 2) * (mono(e1) + mono(e2)), {w}));
  } else {
    S.add(geo(e1, w, (j - t) / 2));
    S.add(geo(e2, w, (j - t - 2) / 2));
  }
  return S;
}

RationalTermSum fx_pm(const Int& a, const Int& h, const Int& d) {
  const Int r1 = floor_div(h * a - d, 2 * h), up = h * a + d, down = h * a - d;
  RationalTermSum S;
  S.add(geo(0, up, r1 + 1));
  S.add(geo(down, down, a - r1 - 1));
  return S;
}

RationalTermSum fx_square(const Int& a, const Int& h, const Int& d) {
  const Int P = h * a * a + a * d + d, Q = h * a * a + d, R = h * a * a + a * d;
  RationalTermSum S;
  S.add(RationalTerm(mono(a * P) + mono(a * Q, -1), {a * d, Q}));
  S.add(RationalTerm(one_minus(a * P), {Q, P}));
  S.add(RationalTerm(mono(a * P) + mono(P, -1), {P, d}));
  S.add(RationalTerm(mono(R) + mono(a * a * (h * a + d), -1), {R, d}));
  return S;
}

RationalTermSum fx_arith(const Int& a, const Int& h, const Int& d, const Int& k) {
  const Int s = floor_div(a - 1, k), r1 = a - 1 - s * k, v = h * a + d * k;
  RationalTermSum S;
  S.add(RationalTerm(mono(0), {}));
  S.add(RationalTerm(one_minus(d * k) * LP::block(h * a + d, v * s), {d, v}));
  S.add(geo((s + 1) * h * a + d * (s * k + 1), d, r1));
  return S;
}

RationalTermSum fx_trunc(const Int& a, const Int& h, const Int& d, const Int& K, const Int& k) {
  const Int q = floor_div(a + K, k), r1 = a + K - q * k, v = h * a + d * k;
  RationalTermSum S;
  S.add(RationalTerm(mono(0), {}));  // N_0 = 0
  S.add(geo(h * a + d * (K + 1), d, k - K));
  S.add(RationalTerm(LP::block(2 * h * a + d * (k + 1), v * (q - 1)) * one_minus(d * k), {v, d}));
  S.add(geo((q + 1) * h * a + d * (q * k + 1), d, r1));
  if (r1 <= K) S.add(RationalTerm(mono(q * h * a + d * a, -1), {}));
  else S.add(RationalTerm(mono((q + 1) * h * a + d * a, -1), {}));
  return S;
}

RationalTermSum fx_even(const Int& a, const Int& h, const Int& d, const Int& k) {
  const Int s = floor_div(a - 2, 2 * k), t = a - 1 - 2 * k * s, v = h * a + 2 * k * d;
  RationalTermSum S;
  S.add(RationalTerm(mono(0), {}));
  S.add(geo(h * a + d, v, s + 1));
  S.add(RationalTerm(LP::block(h * a + 2 * d, v * s) * one_minus(2 * d * k), {v, 2 * d}));
  S.add(RationalTerm(LP::block(2 * h * a + 3 * d, v * s) * one_minus(2 * d * (k - 1)), {v, 2 * d}));
  const Int e1 = h * a * (s + 1) + d * (2 * k * s + 2), e2 = h * a * (s + 2) + d * (2 * k * s + 3);
  if (mod_floor(t, 2) == 1) {
    S.add(RationalTerm(LP::block(e1, d * (t - 1)), {2 * d}));
    S.add(RationalTerm(LP::block(e2, d * (t - 1)), {2 * d}));
  } else {
    S.add(RationalTerm(LP::block(e1, d * t), {2 * d}));
    S.add(RationalTerm(LP::block(e2, d * (t - 2)), {2 * d}));
  }
  return S;
}

RationalTermSum fx_odd(const Int& a, const Int& h, const Int& d, const Int& k) {
  const Int s = floor_div(a - 2, 2 * k + 1), t = a - 1 - (2 * k + 1) * s, v = h * a + (2 * k + 1) * d;
  RationalTermSum S;
  S.add(RationalTerm(mono(0), {}));
  S.add(RationalTerm(LP::block(h * a + d, v * s) * one_minus(2 * d * (k + 1)), {v, 2 * d}));
  S.add(RationalTerm(LP::block(2 * h * a + 2 * d, v * s) * one_minus(2 * d * k), {v, 2 * d}));
  const Int e1 = h * a * (s + 1) + d * ((2 * k + 1) * s + 1), e2 = h * a * (s + 2) + d * ((2 * k + 1) * s + 2);
  if (mod_floor(t, 2) == 1) {
    S.add(RationalTerm(LP::block(e1, d * (t + 1)), {2 * d}));
    S.add(RationalTerm(LP::block(e2, d * (t - 1)), {2 * d}));
  } else {
    S.add(RationalTerm(LP::block(e1, d * t), {2 * d}));
    S.add(RationalTerm(LP::block(e2, d * t), {2 * d}));
  }
  return S;
}

// Dense integer polynomial on exponents [lo, lo + c.size()).
struct Dense {
  std::int64_t lo = 0;
  std::vector<std::int64_t> c;
};

void checked_add(std::int64_t& into, std::int64_t v) {
  if (__builtin_add_overflow(into, v, &into)) throw ResourceError("polynomial expansion: coefficient overflow");
}

// In-place division by (1 - x^b); false if it does not divide exactly.
bool divide_one_minus(Dense& p, std::size_t b) {
  if (b >= p.c.size()) {
    const bool zero = std::all_of(p.c.begin(), p.c.end(), [](std::int64_t v) { return v == 0; });
    if (zero) p.c.clear();
    return zero;
  }
  for (std::size_t e = b; e < p.c.size(); ++e) checked_add(p.c[e], p.c[e - b]);
  for (std::size_t e = p.c.size() - b; e < p.c.size(); ++e)
    if (p.c[e] != 0) return false;
  p.c.resize(p.c.size() - b);
  return true;
}

}  // namespace

RationalTermSum fx_from_table(const NrTable& T) {
  LaurentPoly L;
  for (const auto& v : T.values) L.add(v, 1);
  return RationalTermSum({RationalTerm(std::move(L), {})});
}

RationalTermSum fx_square_double_sum(const Int& a, const Int& h, const Int& d) {
  family_square(a, h, d);  // guards
  LaurentPoly L;
  const Int step = h * a * a;
  for (Int m = 0; m <= a - 1; ++m)
    for (Int i = 0; i <= a - m - 1; ++i) L.add((m + i) * step + (m * (a + 1) + i) * d, 1);
  for (Int m = 0; m <= a - 2; ++m)
    for (Int i = 0; i <= m; ++i) L.add((m + 1) * step + ((m + 1) * a + i) * d, 1);
  return RationalTermSum({RationalTerm(std::move(L), {})});
}

RationalTermSum fx_family(const FamilySpec& spec, const FxOptions& opts) {
  if (spec.tag == FamilyTag::Scale) throw DomainError("family scale has no f(x) constructor");
  evaluate_family(spec, 0);  // the theorem-level hypotheses
  auto p = [&](const char* n) -> const Int& { return spec.at(n); };
  const Int &a = p("a"), &h = p("h"), &d = p("d");
  switch (spec.tag) {
    case FamilyTag::Aj: return fx_aj(a, h, d, p("j"));
    case FamilyTag::A2j: return fx_a2j(a, h, d, p("j"));
    case FamilyTag::Square: return fx_square(a, h, d);
    case FamilyTag::Pm: return fx_pm(a, h, d);
    case FamilyTag::Arith: return fx_arith(a, h, d, p("k"));
    case FamilyTag::TruncArith: return fx_trunc(a, h, d, p("K"), p("k"));
    case FamilyTag::OddSteps:
      if (opts.appendix_guards) require(d > h, "odd-steps", "d > h");
      return fx_odd(a, h, d, p("k"));
    case FamilyTag::EvenSteps:
      if (opts.appendix_guards) require(d > h, "even-steps", "d > h");
      return fx_even(a, h, d, p("k"));
    case FamilyTag::Scale: break;
  }
  throw DomainError("unknown family");
}

std::map<Int, Int> expand_to_polynomial(const RationalTermSum& S, std::size_t max_span) {
  // Flip negative exponents: 1/(1-x^{-b}) = -x^b/(1-x^b).
  std::vector<RationalTerm> terms;
  for (const auto& t : S.terms()) {
    LaurentPoly num = t.numerator;
    std::vector<Int> den;
    for (const auto& b : t.denominator) {
      if (b < 0) {
        num = num * LaurentPoly::monomial(-b, -1);
        den.push_back(-b);
      } else {
        den.push_back(b);
      }
    }
    terms.emplace_back(std::move(num), std::move(den));
  }

  std::map<Int, std::size_t> mult;
  for (const auto& t : terms) {
    std::map<Int, std::size_t> here;
    for (const auto& b : t.denominator) ++here[b];
    for (const auto& [b, m] : here) mult[b] = std::max(mult[b], m);
  }

  // numerator_total = sum N_i * (D / D_i)
  LaurentPoly total;
  for (const auto& t : terms) {
    std::map<Int, std::size_t> here;
    for (const auto& b : t.denominator) ++here[b];
    LaurentPoly num = t.numerator;
    for (const auto& [b, m] : mult)
      for (std::size_t i = here[b]; i < m; ++i) num = num * LaurentPoly::block(0, b);
    total += num;
  }
  if (total.empty()) return {};

  Int lcm = 1;
  for (const auto& [e, c] : total.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  const Int lo = total.terms().begin()->first, hi = total.terms().rbegin()->first;
  if (hi - lo + 1 > Int(static_cast<unsigned long>(max_span)))
    throw ResourceError("polynomial expansion: exponent span " + to_string(Int(hi - lo + 1)) + " exceeds the bound");
  Dense P;
  P.lo = require_int64(lo, "exponent");
  P.c.assign(static_cast<std::size_t>(Int(hi - lo).get_ui()) + 1, 0);
  for (const auto& [e, c] : total.terms()) {
    const Int scaled = c.get_num() * (lcm / c.get_den());
    P.c[static_cast<std::size_t>(Int(e - lo).get_ui())] = require_int64(scaled, "expansion coefficient");
  }
  for (const auto& [b, m] : mult)
    for (std::size_t i = 0; i < m; ++i)
      if (!divide_one_minus(P, static_cast<std::size_t>(require_int64(b, "denominator exponent"))))
        throw DomainError("sum is not a polynomial: (1 - x^" + to_string(b) + ") does not divide the numerator");

  std::map<Int, Int> out;
  for (std::size_t i = 0; i < P.c.size(); ++i) {
    if (P.c[i] == 0) continue;
    Int v(static_cast<long>(P.c[i]));
    if (mod_floor(v, lcm) != 0) throw DomainError("sum is not an integer polynomial");
    out.emplace(Int(P.lo + static_cast<std::int64_t>(i)), v / lcm);
  }
  return out;
}

EquivalenceVerdict fx_equivalence_check(const RationalTermSum& S, const NrTable& T, std::size_t max_span) {
  EquivalenceVerdict v;
  std::map<Int, Int> want;
  for (const auto& n : T.values) want[n] += 1;
  std::map<Int, Int> got;
  try {
    got = expand_to_polynomial(S, max_span);
  } catch (const DomainError& e) {
    v.message = e.what();
    return v;
  }
  auto gi = got.begin();
  auto wi = want.begin();
  while (gi != got.end() || wi != want.end()) {
    Int e;
    if (wi == want.end() || (gi != got.end() && gi->first < wi->first)) e = gi->first;
    else e = wi->first;
    const Int g = (gi != got.end() && gi->first == e) ? gi->second : Int(0);
    const Int w = (wi != want.end() && wi->first == e) ? wi->second : Int(0);
    if (g != w) {
      v.mismatch_exponent = e;
      v.got = g;
      v.want = w;
      v.message = "coefficient of x^" + to_string(e) + " is " + to_string(g) + ", expected " + to_string(w);
      return v;
    }
    if (gi != got.end() && gi->first == e) ++gi;
    if (wi != want.end() && wi->first == e) ++wi;
  }
  v.equal = true;
  v.message = "equal";
  return v;
}

}  // namespace frob
