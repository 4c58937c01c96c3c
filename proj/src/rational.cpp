#include "hcshift/rational.hpp"

#include <cstdlib>

namespace hcshift {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Rational mul_pow2(const Rational& x, long e) {
  Rational r;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Integer floor_sqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("floor_sqrt: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, unsigned k) {
  if (x < 0) throw std::domain_error("sqrt_bounds: negative input");
  const Integer num = x.get_num();
  const Integer den = x.get_den();
  // sqrt(num/den) = sqrt(num*den)/den
  Integer t = num * den;
  Integer root;
  if (is_perfect_square(t, &root)) {
    Rational exact(root, den);
    exact.canonicalize();
    return {exact, exact};
  }
  // scale by 4^k: s = floor(sqrt(t * 4^k)); s/(den*2^k) and (s+1)/(den*2^k)
  Integer scaled = t;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * k);
  Integer s = floor_sqrt(scaled);
  Integer d = den;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k);
  Rational lo(s, d);
  Rational hi(s + 1, d);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

long ceil_log4_ratio(const Rational& a, const Rational& b) {
  if (a < 0 || b <= 0) throw std::domain_error("ceil_log4_ratio: bad input");
  if (a <= b) return 0;
  // smallest L with a <= 4^L * b; seed from bit lengths, then adjust
  const Rational c = a / b;
  const long nb = static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
  long guess = (nb - db) / 2 - 2;
  if (guess < 0) guess = 0;
  while (mul_pow2(b, 2 * guess) < a) ++guess;
  while (guess > 0 && mul_pow2(b, 2 * (guess - 1)) >= a) --guess;
  return guess;
}

Rational sup_norm(const RatString& s) {
  Rational best(0);
  for (const Rational& v : s) {
    Rational a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

Rational string_norm_sq(const RatString& s, Index lo, Index hi) {
  if (lo < 0) lo = 0;
  if (hi > static_cast<Index>(s.size())) hi = static_cast<Index>(s.size());
  Rational acc(0);
  for (Index i = lo; i < hi; ++i) acc += s[static_cast<size_t>(i)] * s[static_cast<size_t>(i)];
  return acc;
}

Rational string_norm_sq(const RatString& s) {
  return string_norm_sq(s, 0, static_cast<Index>(s.size()));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace hcshift
