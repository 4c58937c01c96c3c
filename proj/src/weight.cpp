#include "hcshift/weight.hpp"

#include <algorithm>

#include "hcshift/json_io.hpp"

namespace hcshift {
namespace {

void validate_values(const std::vector<uint8_t>& v, const char* what) {
  for (uint8_t b : v) {
    if (b != 1 && b != 2) {
      throw std::invalid_argument(std::string(what) + ": entries must be 1 or 2");
    }
  }
}

std::vector<Index> cumulative_twos(const std::vector<uint8_t>& v) {
  std::vector<Index> cum(v.size() + 1, 0);
  for (size_t i = 0; i < v.size(); ++i) {
    cum[i + 1] = cum[i] + (v[i] == 2 ? 1 : 0);
  }
  return cum;
}

}  // namespace

WeightSeq::WeightSeq(Kind kind, std::vector<uint8_t> prefix,
                     std::vector<uint8_t> pattern,
                     std::shared_ptr<const WeightTail> gen)
    : kind_(kind),
      prefix_(std::move(prefix)),
      pattern_(std::move(pattern)),
      gen_(std::move(gen)) {
  validate_values(prefix_, "weight prefix");
  validate_values(pattern_, "weight pattern");
  prefix_cum_ = cumulative_twos(prefix_);
  if (kind_ == Kind::Periodic) {
    if (pattern_.empty()) throw std::invalid_argument("periodic: empty pattern");
    pattern_cum_ = cumulative_twos(pattern_);
    pattern_twos_ = pattern_cum_.back();
  }
  if (kind_ == Kind::Generated && !gen_) {
    throw std::invalid_argument("generated: null generator");
  }
}

WeightSeq WeightSeq::all_ones(std::vector<uint8_t> prefix) {
  return WeightSeq(Kind::AllOnes, std::move(prefix), {}, nullptr);
}

WeightSeq WeightSeq::all_twos(std::vector<uint8_t> prefix) {
  return WeightSeq(Kind::AllTwos, std::move(prefix), {}, nullptr);
}

WeightSeq WeightSeq::periodic(std::vector<uint8_t> pattern,
                              std::vector<uint8_t> prefix) {
  return WeightSeq(Kind::Periodic, std::move(prefix), std::move(pattern), nullptr);
}

WeightSeq WeightSeq::generated(std::shared_ptr<const WeightTail> gen,
                               std::vector<uint8_t> prefix) {
  return WeightSeq(Kind::Generated, std::move(prefix), {}, std::move(gen));
}

int WeightSeq::at(Index i) const {
  if (i < 0) throw std::invalid_argument("weight at: negative index");
  if (i < prefix_len()) return prefix_[static_cast<size_t>(i)];
  switch (kind_) {
    case Kind::AllOnes:
      return 1;
    case Kind::AllTwos:
      return 2;
    case Kind::Periodic:
      return pattern_[static_cast<size_t>((i - prefix_len()) %
                                          static_cast<Index>(pattern_.size()))];
    case Kind::Generated:
      return gen_->at(i);
  }
  return 1;
}

Index WeightSeq::twos_below(Index k) const {
  if (k <= 0) return 0;
  const Index pl = prefix_len();
  Index acc = prefix_cum_[static_cast<size_t>(std::min(k, pl))];
  if (k <= pl) return acc;
  const Index span = k - pl;
  switch (kind_) {
    case Kind::AllOnes:
      return acc;
    case Kind::AllTwos:
      return acc + span;
    case Kind::Periodic: {
      const Index p = static_cast<Index>(pattern_.size());
      return acc + (span / p) * pattern_twos_ +
             pattern_cum_[static_cast<size_t>(span % p)];
    }
    case Kind::Generated:
      return acc + gen_->twos_in(pl, k);
  }
  return acc;
}

bool WeightSeq::infinitely_many_twos() const {
  switch (kind_) {
    case Kind::AllOnes:
      return false;
    case Kind::AllTwos:
      return true;
    case Kind::Periodic:
      return pattern_twos_ > 0;
    case Kind::Generated:
      return gen_->infinitely_many_twos();
  }
  return false;
}

Index WeightSeq::max_window_twos_ending_in(Index k, Index end_lo,
                                           Index end_hi) const {
  Index best = 0;
  for (Index e = std::max(end_lo, k); e < end_hi; ++e) {
    best = std::max(best, twos_in_window(e - k, k));
    if (best == k) break;
  }
  return best;
}

Index WeightSeq::max_window_twos_from(Index k, Index min_end) const {
  if (k <= 0) return 0;
  const Index pl = prefix_len();
  switch (kind_) {
    case Kind::AllTwos:
    case Kind::Generated:
      // far-right windows of an all-twos tail carry k twos; for opaque
      // generators k is the sound cap
      return k;
    case Kind::AllOnes:
      // beyond the prefix windows only lose twos
      return max_window_twos_ending_in(k, min_end, std::max(min_end, pl + k) + 1);
    case Kind::Periodic: {
      const Index p = static_cast<Index>(pattern_.size());
      // window counts are p-periodic in the start point beyond the prefix
      return max_window_twos_ending_in(k, min_end,
                                       std::max(min_end, pl + k) + p + 1);
    }
  }
  return k;
}

Rational weight_product(const WeightSeq& w, Index i, Index k) {
  return w.weight_product(i, k);
}

Index twos_below(const WeightSeq& w, Index k) { return w.twos_below(k); }

}  // namespace hcshift
