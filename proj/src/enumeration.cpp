#include "hcshift/enumeration.hpp"

#include <utility>

namespace hcshift {
namespace {

enum class TupleKind { Any, AllNonzero, ContainsZero };

Integer binom(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  if (r < 0) return 0;
  return r;
}

// tuples of given length with entries >= 0 summing to m, under the kind
Integer tuple_count(long length, const Integer& m, TupleKind kind) {
  if (m < 0) return 0;
  if (length == 0) {
    if (m != 0) return 0;
    return kind == TupleKind::ContainsZero ? Integer(0) : Integer(1);
  }
  const unsigned long k = static_cast<unsigned long>(length - 1);
  switch (kind) {
    case TupleKind::Any:
      return binom(m + length - 1, k);
    case TupleKind::AllNonzero:
      return m >= length ? binom(m - 1, k) : Integer(0);
    case TupleKind::ContainsZero:
      return binom(m + length - 1, k) -
             (m >= length ? binom(m - 1, k) : Integer(0));
  }
  return 0;
}

std::vector<Integer> tuple_unrank(long length, Integer m, Integer rank,
                                  TupleKind kind) {
  std::vector<Integer> out;
  out.reserve(static_cast<size_t>(length));
  for (long pos = 0; pos < length; ++pos) {
    const long rest = length - 1 - pos;
    Integer v = (kind == TupleKind::AllNonzero) ? 1 : 0;
    for (;; ++v) {
      if (v > m) throw std::invalid_argument("tuple_unrank: rank out of range");
      TupleKind restKind = kind;
      if (kind == TupleKind::ContainsZero && v == 0) restKind = TupleKind::Any;
      const Integer cnt = tuple_count(rest, m - v, restKind);
      if (rank < cnt) break;
      rank -= cnt;
    }
    out.push_back(v);
    m -= v;
    if (kind == TupleKind::ContainsZero && v == 0) kind = TupleKind::Any;
  }
  if (rank != 0) throw std::invalid_argument("tuple_unrank: rank out of range");
  return out;
}

Integer tuple_rank(const std::vector<Integer>& t, TupleKind kind) {
  Integer m(0);
  for (const Integer& v : t) m += v;
  Integer rank(0);
  const long length = static_cast<long>(t.size());
  for (long pos = 0; pos < length; ++pos) {
    const long rest = length - 1 - pos;
    const Integer lo = (kind == TupleKind::AllNonzero) ? 1 : 0;
    for (Integer v = lo; v < t[static_cast<size_t>(pos)]; ++v) {
      TupleKind restKind = kind;
      if (kind == TupleKind::ContainsZero && v == 0) restKind = TupleKind::Any;
      rank += tuple_count(rest, m - v, restKind);
    }
    m -= t[static_cast<size_t>(pos)];
    if (kind == TupleKind::ContainsZero && t[static_cast<size_t>(pos)] == 0) {
      kind = TupleKind::Any;
    }
  }
  return rank;
}

Integer rational_class_size(const Integer& s) {
  if (s <= 0) return 0;
  if (s == 1) return 1;
  Integer cnt(0);
  for (Integer a = 1; a < s; ++a) {
    if (gcd(a, s) == 1) ++cnt;
  }
  return 2 * cnt;
}

Integer unit_class_size(const Integer& s) {
  if (s < 3) return 0;
  Integer cnt(0);
  for (Integer p = 1; 2 * p < s; ++p) {
    if (gcd(p, s) == 1) ++cnt;
  }
  return cnt;
}

bool is_informative(const RatString& s) {
  if (s.empty()) return false;
  for (const Rational& v : s) {
    if (v == 0) return false;
  }
  return true;
}

Integer string_weight(const RatString& s) {
  Integer w(static_cast<long>(s.size()));
  for (const Rational& v : s) w += rational_index(v);
  return w;
}

Integer string_class_count(const Integer& w, long length, TupleKind kind) {
  return tuple_count(length, w - length, kind);
}

RatString tuple_to_string(const std::vector<Integer>& t) {
  RatString s;
  s.reserve(t.size());
  for (const Integer& idx : t) s.push_back(rational_by_index(idx));
  return s;
}

std::vector<Integer> string_to_tuple(const RatString& s) {
  std::vector<Integer> t;
  t.reserve(s.size());
  for (const Rational& v : s) t.push_back(rational_index(v));
  return t;
}

// shared walker for the three graded string orders
RatString string_unrank(Integer n, TupleKind kind) {
  if (kind != TupleKind::AllNonzero) {
    if (n == 0) return {};
    n -= 1;
  }
  for (Integer w = 1;; ++w) {
    for (long length = 1; length <= w; ++length) {
      const Integer cnt = string_class_count(w, length, kind);
      if (n < cnt) return tuple_to_string(tuple_unrank(length, w - length, n, kind));
      n -= cnt;
    }
  }
}

Integer string_rank(const RatString& s, TupleKind kind) {
  if (s.empty()) {
    if (kind == TupleKind::AllNonzero) {
      throw std::invalid_argument("string_rank: empty string is not informative");
    }
    return 0;
  }
  const Integer w = string_weight(s);
  Integer base = (kind == TupleKind::AllNonzero) ? Integer(0) : Integer(1);
  for (Integer w2 = 1; w2 < w; ++w2) {
    for (long length = 1; length <= w2; ++length) {
      base += string_class_count(w2, length, kind);
    }
  }
  const long myLen = static_cast<long>(s.size());
  for (long length = 1; length < myLen; ++length) {
    base += string_class_count(w, length, kind);
  }
  return base + tuple_rank(string_to_tuple(s), kind);
}

}  // namespace

Rational rational_by_index(const Integer& n) {
  if (n < 0) throw std::invalid_argument("rational_by_index: negative index");
  Integer rest = n;
  for (Integer s = 1;; ++s) {
    const Integer cnt = rational_class_size(s);
    if (rest < cnt) {
      if (s == 1) return Rational(0);
      for (Integer p = 1 - s; p < s; ++p) {
        if (p == 0) continue;
        const Integer q = s - abs(p);
        if (gcd(abs(p), q) != 1) continue;
        if (rest == 0) {
          Rational r(p, q);
          r.canonicalize();
          return r;
        }
        --rest;
      }
    }
    rest -= cnt;
  }
}

Integer rational_index(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  const Integer s = abs(c.get_num()) + c.get_den();
  Integer base(0);
  for (Integer t = 1; t < s; ++t) base += rational_class_size(t);
  if (s == 1) return base;
  for (Integer p = 1 - s; p < s; ++p) {
    if (p == 0) continue;
    const Integer q = s - abs(p);
    if (gcd(abs(p), q) != 1) continue;
    if (p == c.get_num() && q == c.get_den()) return base;
    ++base;
  }
  throw std::logic_error("rational_index: scan failed");
}

Rational unit_rational_by_index(const Integer& n) {
  if (n < 0) throw std::invalid_argument("unit_rational_by_index: negative index");
  Integer rest = n;
  for (Integer s = 3;; ++s) {
    const Integer cnt = unit_class_size(s);
    if (rest < cnt) {
      for (Integer p = 1; 2 * p < s; ++p) {
        if (gcd(p, s) != 1) continue;
        if (rest == 0) {
          Rational r(p, s - p);
          r.canonicalize();
          return r;
        }
        --rest;
      }
    }
    rest -= cnt;
  }
}

Integer unit_rational_index(const Rational& x) {
  if (!(x > 0 && x < 1)) {
    throw std::invalid_argument("unit_rational_index: value not in (0,1)");
  }
  Rational c = x;
  c.canonicalize();
  const Integer s = c.get_num() + c.get_den();
  Integer base(0);
  for (Integer t = 3; t < s; ++t) base += unit_class_size(t);
  for (Integer p = 1; 2 * p < s; ++p) {
    if (gcd(p, s) != 1) continue;
    if (p == c.get_num()) return base;
    ++base;
  }
  throw std::logic_error("unit_rational_index: scan failed");
}

RatString string_by_index(const Integer& n) {
  if (n < 0) throw std::invalid_argument("string_by_index: negative index");
  return string_unrank(n, TupleKind::Any);
}

Integer string_index(const RatString& s) { return string_rank(s, TupleKind::Any); }

Integer cantor_pair(const Integer& x, const Integer& y) {
  const Integer d = x + y;
  return d * (d + 1) / 2 + y;
}

std::pair<Integer, Integer> cantor_unpair(const Integer& n) {
  if (n < 0) throw std::invalid_argument("cantor_unpair: negative index");
  Integer d = floor_sqrt(8 * n + 1);
  d = (d - 1) / 2;
  while (d * (d + 1) / 2 > n) --d;
  while ((d + 1) * (d + 2) / 2 <= n) ++d;
  const Integer y = n - d * (d + 1) / 2;
  return {d - y, y};
}

Challenge enum_challenge(const Integer& n) {
  const auto [sIdx, eIdx] = cantor_unpair(n);
  return {string_by_index(sIdx), unit_rational_by_index(eIdx)};
}

Integer challenge_index(const RatString& q, const Rational& eps) {
  return cantor_pair(string_index(q), unit_rational_index(eps));
}

Integer grid_pair(const Integer& c, const Integer& i) {
  if (c < 0 || i < 0) throw std::invalid_argument("grid_pair: negative input");
  Integer u = c / 3;
  if (i / 4 > u) u = i / 4;
  if (u == 0) return 4 * c + i;
  const Integer start = 12 * u * u;
  if (c < 3 * u) return start + 4 * c + (i - 4 * u);
  return start + 12 * u + (c - 3 * u) * (4 * u + 4) + i;
}

std::pair<Integer, Integer> grid_unpair(const Integer& n) {
  if (n < 0) throw std::invalid_argument("grid_unpair: negative index");
  Integer u = floor_sqrt(n / 12);
  while (12 * (u + 1) * (u + 1) <= n) ++u;
  while (12 * u * u > n) --u;
  Integer r = n - 12 * u * u;
  if (u == 0) return {r / 4, r % 4};
  if (r < 12 * u) return {r / 4, 4 * u + r % 4};
  r -= 12 * u;
  const Integer row = 4 * u + 4;
  return {3 * u + r / row, r % row};
}

Challenge triple_challenge_by_slot(const Integer& c) {
  const auto [j, eIdx] = cantor_unpair(c);
  RatString q;
  if (j % 2 == 0) {
    q = string_unrank(j / 2, TupleKind::AllNonzero);
  } else {
    q = string_unrank((j - 1) / 2, TupleKind::ContainsZero);
  }
  return {std::move(q), unit_rational_by_index(eIdx)};
}

Integer triple_challenge_slot(const RatString& q, const Rational& eps) {
  Integer j;
  if (is_informative(q)) {
    j = 2 * string_rank(q, TupleKind::AllNonzero);
  } else {
    j = 2 * string_rank(q, TupleKind::ContainsZero) + 1;
  }
  return cantor_pair(j, unit_rational_index(eps));
}

TripleDecode enum_triple(const Integer& n) {
  const auto [c, elem] = grid_unpair(n);
  Challenge ch = triple_challenge_by_slot(c);
  Integer p = string_index(ch.q);
  return {std::move(p), std::move(ch.q), std::move(ch.eps), elem};
}

Integer triple_index(const Integer& p, const Rational& eps, const Integer& elem) {
  const RatString q = string_by_index(p);
  return grid_pair(triple_challenge_slot(q, eps), elem);
}

namespace {

class CanonicalSource final : public TripleSource {
 public:
  TripleDecode triple(Index n) const override {
    return enum_triple(Integer(static_cast<long>(n)));
  }
  std::string name() const override { return "canonical"; }
};

class ExplicitSource final : public TripleSource {
 public:
  explicit ExplicitSource(std::vector<TripleDecode> triples)
      : triples_(std::move(triples)) {}
  TripleDecode triple(Index n) const override {
    if (n < 0 || n >= static_cast<Index>(triples_.size())) {
      throw std::out_of_range("explicit triple source exhausted");
    }
    return triples_[static_cast<size_t>(n)];
  }
  std::string name() const override { return "explicit"; }

 private:
  std::vector<TripleDecode> triples_;
};

}  // namespace

std::shared_ptr<const TripleSource> canonical_triple_source() {
  static const auto instance = std::make_shared<const CanonicalSource>();
  return instance;
}

std::shared_ptr<const TripleSource> explicit_triple_source(
    std::vector<TripleDecode> triples) {
  return std::make_shared<const ExplicitSource>(std::move(triples));
}

}  // namespace hcshift
