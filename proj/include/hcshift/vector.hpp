#pragma once

#include <memory>
#include <optional>

#include "hcshift/json_fwd.hpp"
#include "hcshift/rational.hpp"

namespace hcshift {

// Lazily generated tail of an l2 vector. A generator owns all indices from
// some start position onward; coord() must be exact, and tail_bound_sq(m)
// must be a sound upper bound on sum_{i>=m} x(i)^2 that is non-increasing in
// m and tends to 0. bound_exact() marks generators whose bound is the exact
// tail norm (finite support, closed-form geometric sums).
class TailGen {
 public:
  virtual ~TailGen() = default;
  virtual Rational coord(Index i) const = 0;
  virtual Rational tail_bound_sq(Index m) const = 0;
  virtual bool bound_exact() const = 0;
  virtual std::optional<Index> support_end() const { return std::nullopt; }
  // nonzero coordinates; only available for finitely supported generators
  virtual std::vector<std::pair<Index, Rational>> support_entries() const;
  virtual Json describe() const = 0;
};

// An l2 element: explicit rational prefix plus a tail descriptor. A null
// tail means all coordinates beyond the prefix are zero.
class L2Vector {
 public:
  L2Vector() = default;
  explicit L2Vector(RatString prefix) : prefix_(std::move(prefix)) {}
  L2Vector(RatString prefix, std::shared_ptr<const TailGen> tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

  static L2Vector zero() { return L2Vector(); }
  static L2Vector unit(Index i);
  static L2Vector sparse(std::vector<std::pair<Index, Rational>> entries);
  // x(i) = scale * ratio^i; requires ratio^2 < 1
  static L2Vector geometric(const Rational& scale, const Rational& ratio);
  // same but zero from index cutoff on (explicit prefix)
  static L2Vector geometric_truncated(const Rational& scale,
                                      const Rational& ratio, Index cutoff);

  Rational coord(Index i) const;
  Index prefix_len() const { return static_cast<Index>(prefix_.size()); }
  const RatString& prefix() const { return prefix_; }
  const std::shared_ptr<const TailGen>& tail() const { return tail_; }
  bool zero_tail() const { return tail_ == nullptr; }

  // exact sum of x(i)^2 over [lo, hi)
  Rational norm_sq_range(Index lo, Index hi) const;
  // sound upper bound on sum_{i>=m} x(i)^2; exact when tail_bound_exact()
  Rational tail_norm_sq_upper(Index m) const;
  bool tail_bound_exact() const;
  std::optional<Index> support_end() const;
  // sorted nonzero coordinates; throws unless finitely supported
  std::vector<std::pair<Index, Rational>> materialize_support() const;

 private:
  RatString prefix_;
  std::shared_ptr<const TailGen> tail_;
};

// x + s^frown(0bar): coordinatewise sum on the first |s| coordinates
L2Vector translate(const L2Vector& x, const RatString& s);

Rational l2_norm_sq(const L2Vector& x, Index lo, Index hi);
Rational tail_norm_sq_upper(const L2Vector& x, Index m);

}  // namespace hcshift
