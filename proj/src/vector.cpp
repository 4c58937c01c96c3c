#include "hcshift/vector.hpp"

#include <algorithm>

#include "hcshift/json_io.hpp"

namespace hcshift {
namespace {

class SparseTail final : public TailGen {
 public:
  explicit SparseTail(std::vector<std::pair<Index, Rational>> entries)
      : entries_(std::move(entries)) {}

  Rational coord(Index i) const override {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const auto& e, Index v) { return e.first < v; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Rational(0);
  }

  Rational tail_bound_sq(Index m) const override {
    Rational acc(0);
    for (auto it = std::lower_bound(
             entries_.begin(), entries_.end(), m,
             [](const auto& e, Index v) { return e.first < v; });
         it != entries_.end(); ++it) {
      acc += it->second * it->second;
    }
    return acc;
  }

  bool bound_exact() const override { return true; }

  std::optional<Index> support_end() const override {
    if (entries_.empty()) return -1;
    return entries_.back().first;
  }

  std::vector<std::pair<Index, Rational>> support_entries() const override {
    return entries_;
  }

  Json describe() const override {
    Json entries = Json::array();
    for (const auto& [i, v] : entries_) {
      entries.push_back(Json::array({i, format_rational(v)}));
    }
    return Json{{"kind", "sparse"}, {"entries", entries}};
  }

  const std::vector<std::pair<Index, Rational>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<Index, Rational>> entries_;  // sorted, values nonzero
};

class GeometricTail final : public TailGen {
 public:
  GeometricTail(Rational scale, Rational ratio)
      : scale_(std::move(scale)), ratio_(std::move(ratio)) {
    if (!(ratio_ * ratio_ < 1)) {
      throw std::invalid_argument("geometric tail requires ratio^2 < 1");
    }
  }

  Rational coord(Index i) const override { return scale_ * pow_ratio(i); }

  Rational tail_bound_sq(Index m) const override {
    // sum_{i>=m} scale^2 r^{2i} = scale^2 r^{2m} / (1 - r^2)
    const Rational rm = pow_ratio(m);
    return scale_ * scale_ * rm * rm / (1 - ratio_ * ratio_);
  }

  bool bound_exact() const override { return true; }

  Json describe() const override {
    return Json{{"kind", "geometric"},
                {"scale", format_rational(scale_)},
                {"ratio", format_rational(ratio_)}};
  }

 private:
  Rational pow_ratio(Index i) const {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), ratio_.get_num().get_mpz_t(),
               static_cast<unsigned long>(i));
    mpz_pow_ui(den.get_mpz_t(), ratio_.get_den().get_mpz_t(),
               static_cast<unsigned long>(i));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational scale_;
  Rational ratio_;
};

}  // namespace

std::vector<std::pair<Index, Rational>> TailGen::support_entries() const {
  const auto end = support_end();
  if (!end) {
    throw std::logic_error("support_entries: generator is not finitely supported");
  }
  // fallback scan; sparse generators override with a direct copy
  std::vector<std::pair<Index, Rational>> out;
  for (Index i = 0; i <= *end; ++i) {
    Rational v = coord(i);
    if (v != 0) out.emplace_back(i, std::move(v));
  }
  return out;
}

L2Vector L2Vector::unit(Index i) {
  if (i < 0) throw std::invalid_argument("unit: negative index");
  RatString prefix(static_cast<size_t>(i) + 1, Rational(0));
  prefix.back() = 1;
  return L2Vector(std::move(prefix));
}

L2Vector L2Vector::sparse(std::vector<std::pair<Index, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Index, Rational>> clean;
  for (auto& e : entries) {
    if (e.first < 0) throw std::invalid_argument("sparse: negative index");
    if (!clean.empty() && clean.back().first == e.first) {
      throw std::invalid_argument("sparse: duplicate index");
    }
    if (e.second != 0) clean.push_back(std::move(e));
  }
  return L2Vector({}, std::make_shared<SparseTail>(std::move(clean)));
}

L2Vector L2Vector::geometric(const Rational& scale, const Rational& ratio) {
  return L2Vector({}, std::make_shared<GeometricTail>(scale, ratio));
}

L2Vector L2Vector::geometric_truncated(const Rational& scale,
                                       const Rational& ratio, Index cutoff) {
  if (cutoff < 0) throw std::invalid_argument("geometric_truncated: negative cutoff");
  RatString prefix;
  prefix.reserve(static_cast<size_t>(cutoff));
  Rational v = scale;
  for (Index i = 0; i < cutoff; ++i) {
    prefix.push_back(v);
    v *= ratio;
  }
  return L2Vector(std::move(prefix));
}

Rational L2Vector::coord(Index i) const {
  if (i < 0) throw std::invalid_argument("coord: negative index");
  if (i < prefix_len()) return prefix_[static_cast<size_t>(i)];
  if (tail_) return tail_->coord(i);
  return Rational(0);
}

Rational L2Vector::norm_sq_range(Index lo, Index hi) const {
  if (lo < 0) lo = 0;
  if (hi <= lo) return Rational(0);
  Rational acc = string_norm_sq(prefix_, lo, std::min(hi, prefix_len()));
  if (!tail_ || hi <= prefix_len()) return acc;
  Index from = std::max(lo, prefix_len());
  if (auto* sp = dynamic_cast<const SparseTail*>(tail_.get())) {
    for (const auto& [i, v] : sp->entries()) {
      if (i >= from && i < hi) acc += v * v;
    }
    return acc;
  }
  for (Index i = from; i < hi; ++i) {
    const Rational v = tail_->coord(i);
    acc += v * v;
  }
  return acc;
}

Rational L2Vector::tail_norm_sq_upper(Index m) const {
  if (m < 0) m = 0;
  if (m >= prefix_len()) {
    return tail_ ? tail_->tail_bound_sq(m) : Rational(0);
  }
  Rational acc = string_norm_sq(prefix_, m, prefix_len());
  if (tail_) acc += tail_->tail_bound_sq(prefix_len());
  return acc;
}

bool L2Vector::tail_bound_exact() const {
  return tail_ == nullptr || tail_->bound_exact();
}

std::optional<Index> L2Vector::support_end() const {
  Index end = -1;
  for (Index i = 0; i < prefix_len(); ++i) {
    if (prefix_[static_cast<size_t>(i)] != 0) end = i;
  }
  if (!tail_) return end;
  const auto tailEnd = tail_->support_end();
  if (!tailEnd) return std::nullopt;
  return std::max(end, *tailEnd);
}

L2Vector translate(const L2Vector& x, const RatString& s) {
  const Index slen = static_cast<Index>(s.size());
  const Index plen = std::max(slen, x.prefix_len());
  RatString prefix;
  prefix.reserve(static_cast<size_t>(plen));
  for (Index i = 0; i < plen; ++i) {
    Rational v = x.coord(i);
    if (i < slen) v += s[static_cast<size_t>(i)];
    prefix.push_back(std::move(v));
  }
  return L2Vector(std::move(prefix), x.tail());
}

Rational l2_norm_sq(const L2Vector& x, Index lo, Index hi) {
  return x.norm_sq_range(lo, hi);
}

Rational tail_norm_sq_upper(const L2Vector& x, Index m) {
  return x.tail_norm_sq_upper(m);
}

}  // namespace hcshift
