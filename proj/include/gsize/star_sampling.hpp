#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "sample.hpp"

// Star sampling (experimental).
//
// Treats the concatenated neighbor lists N(S) of an independence sample as a
// degree-biased sample and feeds it to the weighted collision estimator. The
// degrees of the neighbor nodes are unknown, so the two weight sums that
// estimator needs are replaced by
//
//   psi1     ~ |N(S)| <k^2>/<k>    (sum of degrees over N(S))
//   psi_neg1 ~ |N(S)| |S| / sum deg  (sum of inverse degrees over N(S))
//
// with Hansen-Hurwitz reweighting for WIS input. Accuracy is poor in
// practice; the method is kept for comparison only.
//
// Collisions between two listings of the same neighbor under two copies of
// the same sampled node are counted like any other collision. Their number is
// reported separately in `same_parent_collisions`.
namespace gsize {

struct StarAggregates {
  std::uint64_t neighbor_count = 0;  // |N(S)| as a multiset, = sum of degrees
  double psi1 = 0.0;
  double psi_neg1 = 0.0;
  double ncol_star = 0.0;
  std::uint64_t same_parent_collisions = 0;
};

enum class StarVariant { uis, wis };

inline std::optional<StarVariant> parse_star_variant(std::string_view s) {
  if (s == "uis") return StarVariant::uis;
  if (s == "wis") return StarVariant::wis;
  return std::nullopt;
}

namespace detail {

inline std::uint64_t degree_total(const Sample& s) {
  std::uint64_t total = 0;
  for (const auto& r : s.records()) total += r.degree;
  if (total == 0) throw data_error("star sampling needs at least one sampled node with neighbors");
  return total;
}

inline std::uint64_t same_parent_collisions(const Sample& s) {
  std::unordered_map<node_t, std::pair<std::uint64_t, std::uint64_t>> by_parent;  // (copies, degree)
  for (const auto& r : s.records()) {
    auto& e = by_parent[r.node];
    ++e.first;
    e.second = r.degree;
  }
  std::uint64_t total = 0;
  for (const auto& [v, e] : by_parent) total += e.first * (e.first - 1) / 2 * e.second;
  return total;
}

}  // namespace detail

// Flattened N(S) with the sampled parent's weight attached to each listing.
struct NeighborListing {
  std::vector<node_t> nodes;
  std::vector<double> weights;
};

inline NeighborListing flatten_neighbors(const Sample& s) {
  NeighborListing out;
  out.nodes.reserve(s.neighbor_total());
  out.weights.reserve(s.neighbor_total());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double w = effective_weight(s, i);
    for (node_t a : s.neighbors(i)) {
      out.nodes.push_back(a);
      out.weights.push_back(w);
    }
  }
  return out;
}

// C(L, 2) * sum_{i != j} 1{v_i = v_j} / (w_i w_j)  /  sum_{i != j} 1 / (w_i w_j)
inline double star_ncol_wis(std::span<const node_t> nodes, std::span<const double> weights) {
  if (nodes.size() != weights.size()) throw config_error("one weight per neighbor listing required");
  std::vector<double> inv(weights.size());
  struct Group {
    CompensatedSum sum, sum_sq;
  };
  std::unordered_map<node_t, Group> groups;
  groups.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(weights[i] > 0.0)) throw data_error("weights must be positive");
    inv[i] = 1.0 / weights[i];
    auto& g = groups[nodes[i]];
    g.sum += inv[i];
    g.sum_sq += inv[i] * inv[i];
  }
  const double all_pairs = pairwise_product_sum(inv);
  if (all_pairs == 0.0) return 0.0;
  CompensatedSum same;
  for (const auto& [v, g] : groups) {
    const double sum = g.sum.value();
    same += 0.5 * (sum * sum - g.sum_sq.value());
  }
  const auto len = static_cast<double>(nodes.size());
  return len * (len - 1.0) / 2.0 * same.value() / all_pairs;
}

inline StarAggregates star_aggregates_uis(const Sample& s) {
  if (s.empty()) throw config_error("star sampling needs a non-empty sample");
  const std::uint64_t deg_total = detail::degree_total(s);
  std::uint64_t deg_sq = 0;
  for (const auto& r : s.records()) deg_sq += static_cast<std::uint64_t>(r.degree) * r.degree;
  StarAggregates a;
  a.neighbor_count = s.neighbor_total();
  const auto len = static_cast<double>(a.neighbor_count);
  a.psi1 = len * static_cast<double>(deg_sq) / static_cast<double>(deg_total);
  a.psi_neg1 = len * static_cast<double>(s.size()) / static_cast<double>(deg_total);
  std::unordered_map<node_t, std::uint64_t> listings;
  listings.reserve(s.neighbor_total());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (node_t v : s.neighbors(i)) ++listings[v];
  std::uint64_t ncol = 0;
  for (const auto& [v, c] : listings) ncol += c * (c - 1) / 2;
  a.ncol_star = static_cast<double>(ncol);
  a.same_parent_collisions = detail::same_parent_collisions(s);
  return a;
}

inline StarAggregates star_aggregates_wis(const Sample& s) {
  if (s.empty()) throw config_error("star sampling needs a non-empty sample");
  detail::degree_total(s);
  CompensatedSum sq_over_w, deg_over_w, inv_w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double inv = 1.0 / effective_weight(s, i);
    const auto d = static_cast<double>(s[i].degree);
    sq_over_w += d * d * inv;
    deg_over_w += d * inv;
    inv_w += inv;
  }
  StarAggregates a;
  a.neighbor_count = s.neighbor_total();
  const auto len = static_cast<double>(a.neighbor_count);
  a.psi1 = len * sq_over_w.value() / deg_over_w.value();
  a.psi_neg1 = len * inv_w.value() / deg_over_w.value();
  const auto flat = flatten_neighbors(s);
  a.ncol_star = star_ncol_wis(flat.nodes, flat.weights);
  a.same_parent_collisions = detail::same_parent_collisions(s);
  return a;
}

inline StarAggregates star_aggregates(const Sample& s, StarVariant variant) {
  return variant == StarVariant::uis ? star_aggregates_uis(s) : star_aggregates_wis(s);
}

// psi1 * psi_neg1 / (2 ncol_star)
inline RatioEstimate star_estimate_ratio(const Sample& s, StarVariant variant) {
  const auto a = star_aggregates(s, variant);
  return {a.psi1 * a.psi_neg1, 2.0 * a.ncol_star};
}

inline EstimateOutcome star_estimate(const Sample& s, StarVariant variant) { return star_estimate_ratio(s, variant).outcome(); }

// Variant chosen from the sample's method.
inline EstimateOutcome star_estimate(const Sample& s) {
  return star_estimate(s, s.meta.method == SamplingMethod::uis ? StarVariant::uis : StarVariant::wis);
}

}  // namespace gsize
