#pragma once

#include <memory>
#include <optional>

#include "hcshift/json_fwd.hpp"
#include "hcshift/rational.hpp"

namespace hcshift {

// Tail rule of a {1,2}-valued weight sequence beyond its explicit prefix.
// at() and twos_below() are absolute-indexed; a generator owns all indices
// from its start position (the prefix length) onward.
class WeightTail {
 public:
  virtual ~WeightTail() = default;
  virtual int at(Index i) const = 0;
  virtual Index twos_in(Index lo, Index hi) const = 0;  // twos in [lo, hi)
  virtual bool infinitely_many_twos() const = 0;
  // Niceness oracle for generated rules: nullopt means "no oracle".
  virtual std::optional<bool> nice_oracle() const { return std::nullopt; }
  virtual Json describe() const = 0;
};

class WeightSeq {
 public:
  enum class Kind { AllOnes, AllTwos, Periodic, Generated };

  static WeightSeq all_ones(std::vector<uint8_t> prefix = {});
  static WeightSeq all_twos(std::vector<uint8_t> prefix = {});
  static WeightSeq periodic(std::vector<uint8_t> pattern,
                            std::vector<uint8_t> prefix = {});
  static WeightSeq generated(std::shared_ptr<const WeightTail> gen,
                             std::vector<uint8_t> prefix = {});

  int at(Index i) const;
  Index twos_below(Index k) const;           // |{i < k : w(i) = 2}|
  Index twos_in_window(Index i, Index k) const {
    return twos_below(i + k) - twos_below(i);
  }
  Rational weight_product(Index i, Index k) const {
    return pow2(static_cast<long>(twos_in_window(i, k)));
  }

  bool infinitely_many_twos() const;

  Kind kind() const { return kind_; }
  const std::vector<uint8_t>& prefix() const { return prefix_; }
  Index prefix_len() const { return static_cast<Index>(prefix_.size()); }
  const std::vector<uint8_t>& pattern() const { return pattern_; }
  const std::shared_ptr<const WeightTail>& generator() const { return gen_; }

  // sup over t of twos in [t, t+k) with t+k >= min_end (capped by k itself)
  Index max_window_twos_from(Index k, Index min_end) const;
  // max over windows [e-k, e) with e in [end_lo, end_hi)
  Index max_window_twos_ending_in(Index k, Index end_lo, Index end_hi) const;

 private:
  WeightSeq(Kind kind, std::vector<uint8_t> prefix,
            std::vector<uint8_t> pattern,
            std::shared_ptr<const WeightTail> gen);

  Kind kind_ = Kind::AllOnes;
  std::vector<uint8_t> prefix_;
  std::vector<Index> prefix_cum_;  // twos in prefix[0, i)
  std::vector<uint8_t> pattern_;
  std::vector<Index> pattern_cum_;
  Index pattern_twos_ = 0;
  std::shared_ptr<const WeightTail> gen_;
};

Rational weight_product(const WeightSeq& w, Index i, Index k);
Index twos_below(const WeightSeq& w, Index k);

}  // namespace hcshift
