#pragma once

#include <memory>

#include "hcshift/rational.hpp"

namespace hcshift {

// Canonical enumerations. Every index is an arbitrary-precision natural so
// the bijections are total; desk-scale callers stay in small ranges.
//
// - Rationals: ordered by (|num| + den, then num) over reduced fractions.
// - Rationals in (0,1): ordered by (num + den, then num).
// - Rational strings: graded by weight = length + sum of entry indices,
//   then by length, then lexicographically in entry-index order. (A plain
//   (length, lex) order is not an omega-enumeration over an infinite
//   alphabet, so the grading carries the length classes.)
Rational rational_by_index(const Integer& n);
Integer rational_index(const Rational& x);

Rational unit_rational_by_index(const Integer& n);
Integer unit_rational_index(const Rational& x);  // throws unless 0 < x < 1

RatString string_by_index(const Integer& n);  // the surjection pi (bijective here)
Integer string_index(const RatString& s);

Integer cantor_pair(const Integer& x, const Integer& y);
std::pair<Integer, Integer> cantor_unpair(const Integer& n);

// Basic-neighborhood challenges (q_n, eps_n): Cantor diagonal over
// (string index, unit-rational index).
struct Challenge {
  RatString q;
  Rational eps;
};
Challenge enum_challenge(const Integer& n);
Integer challenge_index(const RatString& q, const Rational& eps);

// Triple coding <p, eps, i> for the subset encoder. The layout is chosen so
// that small challenges mounted on small universe elements land on small
// indices (the interval partition grows geometrically with the block index,
// so a scattering pairing would make even desk-scale verification
// infeasible):
//   - challenge slots j alternate between strings with all entries nonzero
//     (even j) and the remaining strings (odd j), each side in graded order;
//   - c = cantor(j, eps index) names the mounted challenge;
//   - n <-> (c, i) walks growing 3x4 grid shells: shell u covers the box
//     c < 3(u+1), i < 4(u+1) minus the previous box, in (c, i)-lex order.
// With this order the twelve pairs (c < 3, i < 4) occupy n = 0..11 and
// (c = 0, i = 4..7) occupy n = 12..15.
struct TripleDecode {
  Integer p;      // pi-index of the challenge string
  RatString q;    // pi(p)
  Rational eps;   // in (0,1)
  Integer elem;   // universe element
};
TripleDecode enum_triple(const Integer& n);
Integer triple_index(const Integer& p, const Rational& eps, const Integer& elem);

Integer grid_pair(const Integer& c, const Integer& i);
std::pair<Integer, Integer> grid_unpair(const Integer& n);

// Order of challenge slots used by the triple coding.
Challenge triple_challenge_by_slot(const Integer& c);
Integer triple_challenge_slot(const RatString& q, const Rational& eps);

// Source of decoded triples consumed by the interval partition. The
// canonical source follows enum_triple; tests may inject explicit lists.
class TripleSource {
 public:
  virtual ~TripleSource() = default;
  virtual TripleDecode triple(Index n) const = 0;
  virtual std::string name() const = 0;
};

std::shared_ptr<const TripleSource> canonical_triple_source();
std::shared_ptr<const TripleSource> explicit_triple_source(
    std::vector<TripleDecode> triples);

}  // namespace hcshift
