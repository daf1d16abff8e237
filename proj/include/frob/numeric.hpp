#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace frob {

using Int = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Int& num, const Int& den);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);  // result in [0, |b|)
Int gcd(const Int& a, const Int& b);
Int ipow(const Int& base, unsigned long e);
Rational rpow(const Rational& base, long e);  // negative e needs base != 0
Int factorial(std::size_t n);
Int binomial(const Int& n, std::size_t k);

// Bernoulli numbers with B_1 = -1/2, i.e. t/(1-e^t) = sum -B_n t^n/n!.
Rational bernoulli(std::size_t n);
Int stirling2(std::size_t p, std::size_t k);
Int stirling1(std::size_t p, std::size_t k);  // signed: (n)_p = sum s(p,k) n^k
Int falling_factorial(const Int& n, std::size_t p);

// Throws InternalError (mentioning `what`) unless q is an integer.
Int exact_integer(const Rational& q, std::string_view what);

std::optional<std::int64_t> to_int64(const Int& v);
std::int64_t require_int64(const Int& v, std::string_view what);

std::string to_string(const Int& v);
std::string to_string(const Rational& q);  // "p" or "p/q"
Int parse_int(std::string_view s);
Rational parse_rational(std::string_view s);

}  // namespace frob
