#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcshift {

// Exact arbitrary-precision arithmetic. All norms are carried around in
// squared form so that every comparison in the library is a rational one.
using Integer = mpz_class;
using Rational = mpq_class;
using Index = long long;

// A finite string of rationals (q, s, r, ... in basic-neighborhood data).
using RatString = std::vector<Rational>;

Rational pow2(long e);  // 2^e for any sign of e
Rational mul_pow2(const Rational& x, long e);

Integer floor_sqrt(const Integer& n);
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// lower^2 <= x <= upper^2 with upper - lower <= 2^-k.
// Returns an equal pair iff sqrt(x) is rational. Throws on negative input.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, unsigned k);

// Smallest L >= 0 with 4^-L * a <= b (requires a >= 0, b > 0).
long ceil_log4_ratio(const Rational& a, const Rational& b);

// max_i |s(i)|, 0 for the empty string
Rational sup_norm(const RatString& s);

// sum of s(i)^2 over [lo, hi) intersected with the string's support
Rational string_norm_sq(const RatString& s, Index lo, Index hi);
Rational string_norm_sq(const RatString& s);

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& x);  // canonical "p/q"

}  // namespace hcshift
