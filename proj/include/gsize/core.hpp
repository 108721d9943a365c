#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "sample.hpp"

namespace gsize {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// A size estimate, or the sentinel for a zero denominator (no collisions of
// the kind the estimator counts; the estimate is infinite).
class EstimateOutcome {
 public:
  static EstimateOutcome finite(double v) { return EstimateOutcome(v); }
  static EstimateOutcome no_collisions() { return EstimateOutcome(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  explicit operator bool() const noexcept { return is_finite(); }
  double value() const {
    if (!value_) throw std::logic_error("estimate is infinite (no collisions)");
    return *value_;
  }
  std::optional<double> get() const noexcept { return value_; }

  friend bool operator==(const EstimateOutcome&, const EstimateOutcome&) = default;

 private:
  EstimateOutcome() = default;
  explicit EstimateOutcome(double v) : value_(v) {}
  std::optional<double> value_;
};

// numerator / denominator + offset. Every pairwise estimator reports its
// terms this way so subsample estimates can be pooled by summing numerators
// and denominators separately.
struct RatioEstimate {
  double numerator = 0.0;
  double denominator = 0.0;
  double offset = 0.0;

  EstimateOutcome outcome() const {
    if (denominator == 0.0) return EstimateOutcome::no_collisions();
    return EstimateOutcome::finite(numerator / denominator + offset);
  }
};

// ---------------------------------------------------------------------------
// Counting primitives. All are linear in the sample size (plus the snapshot
// adjacency size where neighbors are involved).

using Multiplicity = std::unordered_map<node_t, std::uint64_t>;

inline Multiplicity multiplicities(const Sample& s) {
  Multiplicity c;
  c.reserve(s.size());
  for (const auto& r : s.records()) ++c[r.node];
  return c;
}

inline std::uint64_t lookup(const Multiplicity& m, node_t v) {
  const auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

// Unordered pairs i < j with s_i == s_j.
inline std::uint64_t count_collisions(const Sample& s) {
  std::uint64_t total = 0;
  for (const auto& [v, c] : multiplicities(s)) total += c * (c - 1) / 2;
  return total;
}

inline std::size_t count_unique(const Sample& s) { return multiplicities(s).size(); }

// Unordered pairs i < j whose nodes are adjacent; repeated occurrences count
// separately. Adjacency comes from the record snapshots unless `oracle` is
// given.
inline std::uint64_t count_induced_edges(const Sample& s, const Graph* oracle = nullptr) {
  const auto c = multiplicities(s);
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto nb = oracle ? oracle->neighbors(s[i].node) : s.neighbors(i);
    for (node_t a : nb) twice += lookup(c, a);
  }
  return twice / 2;
}

enum class AuxMode { set, multiset };

inline std::string_view to_string(AuxMode m) { return m == AuxMode::set ? "set" : "multiset"; }

inline std::optional<AuxMode> parse_aux_mode(std::string_view s) {
  if (s == "set") return AuxMode::set;
  if (s == "multiset") return AuxMode::multiset;
  return std::nullopt;
}

// Union of the sample's neighbor snapshots.
struct AuxiliarySet {
  AuxMode mode = AuxMode::set;
  Multiplicity counts;  // all 1 in set mode
  std::uint64_t cardinality = 0;

  std::uint64_t multiplicity(node_t v) const { return lookup(counts, v); }
};

inline AuxiliarySet build_auxiliary(const Sample& s, AuxMode mode) {
  AuxiliarySet a;
  a.mode = mode;
  a.counts.reserve(s.neighbor_total());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (node_t v : s.neighbors(i)) {
      auto& c = a.counts[v];
      c = mode == AuxMode::set ? 1 : c + 1;
    }
  if (mode == AuxMode::set)
    a.cardinality = a.counts.size();
  else
    a.cardinality = s.neighbor_total();
  return a;
}

// sum over s in S, a in A of 1{s == a}, multiplicities honored.
inline std::uint64_t count_cross_collisions(const Sample& s, const AuxiliarySet& a) {
  std::uint64_t total = 0;
  for (const auto& r : s.records()) total += a.multiplicity(r.node);
  return total;
}

// ---------------------------------------------------------------------------
// Weights.

// Weight of record i as seen by the estimators. UIS samples are unweighted
// regardless of what the records carry.
inline double effective_weight(const Sample& s, std::size_t i) {
  if (s.meta.method == SamplingMethod::uis) return 1.0;
  const double w = s[i].weight;
  if (!(w > 0.0) || !std::isfinite(w))
    throw data_error("record " + std::to_string(i) + " has non-positive weight");
  return w;
}

inline std::vector<double> inverse_weights(const Sample& s) {
  std::vector<double> inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[i] = 1.0 / effective_weight(s, i);
  return inv;
}

// sum_{i<j} x_i x_j = ((sum x)^2 - sum x^2) / 2
inline double pairwise_product_sum(std::span<const double> x) {
  CompensatedSum sum, sum_sq;
  for (double v : x) {
    sum += v;
    sum_sq += v * v;
  }
  const double s = sum.value();
  return 0.5 * (s * s - sum_sq.value());
}

// sum_{i<j} 1 / (w_i w_j)
inline double pairwise_inverse_weight_sum(std::span<const double> weights) {
  std::vector<double> inv(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) throw data_error("weights must be positive");
    inv[i] = 1.0 / weights[i];
  }
  return pairwise_product_sum(inv);
}

inline double pairwise_inverse_weight_sum(const Sample& s) { return pairwise_product_sum(inverse_weights(s)); }

// ---------------------------------------------------------------------------
// Aggregation across subsamples.

// Pools parts by summing numerators and denominators. Offsets must agree; the
// first part's is used.
inline RatioEstimate pool_ratios(std::span<const RatioEstimate> parts) {
  if (parts.empty()) throw config_error("nothing to aggregate");
  CompensatedSum num, den;
  for (const auto& p : parts) {
    num += p.numerator;
    den += p.denominator;
  }
  return {num.value(), den.value(), parts.front().offset};
}

inline EstimateOutcome aggregate_ratios(std::span<const RatioEstimate> parts) { return pool_ratios(parts).outcome(); }

// Plain mean; a single infinite member makes the mean infinite.
inline EstimateOutcome aggregate_mean(std::span<const EstimateOutcome> values) {
  if (values.empty()) throw config_error("nothing to aggregate");
  CompensatedSum sum;
  for (const auto& v : values) {
    if (!v) return EstimateOutcome::no_collisions();
    sum += v.value();
  }
  return EstimateOutcome::finite(sum.value() / static_cast<double>(values.size()));
}

}  // namespace gsize
