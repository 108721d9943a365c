#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "sample.hpp"

// Induced-edge estimators for independence samples (uniform or weighted).
//
// IND-A plugs sample estimates of the mean degree and the edge density into
// N = <k>/rho + 1. IND-B counts cross-collisions between the sample S and an
// auxiliary node collection A, by default the neighbors of the sampled nodes.
// WIS variants apply Hansen-Hurwitz reweighting (each term of s divided by
// w(s); pair terms by w(s_i) w(s_j)). UIS samples always take the unweighted
// path.
namespace gsize {

inline double mean_degree_uis(const Sample& s) {
  if (s.empty()) throw config_error("mean degree needs a non-empty sample");
  std::uint64_t total = 0;
  for (const auto& r : s.records()) total += r.degree;
  return static_cast<double>(total) / static_cast<double>(s.size());
}

inline double density_uis(const Sample& s) {
  if (s.size() < 2) throw config_error("density needs at least two samples");
  const auto n = static_cast<double>(s.size());
  return static_cast<double>(count_induced_edges(s)) / (n * (n - 1.0) / 2.0);
}

// (n - 1) sum deg / (2 n^ind) + 1
inline RatioEstimate inda_uis_ratio(const Sample& s) {
  if (s.size() < 2) throw config_error("IND-A needs at least two samples");
  std::uint64_t degrees = 0;
  for (const auto& r : s.records()) degrees += r.degree;
  const auto n = static_cast<double>(s.size());
  return {(n - 1.0) * static_cast<double>(degrees), 2.0 * static_cast<double>(count_induced_edges(s)), 1.0};
}

inline EstimateOutcome inda_uis(const Sample& s) { return inda_uis_ratio(s).outcome(); }

namespace detail {

struct WeightedDegreeSums {
  double degree_over_w = 0.0;  // sum deg/w
  double inv_w = 0.0;          // sum 1/w
};

inline WeightedDegreeSums weighted_degree_sums(const Sample& s, const std::vector<double>& inv) {
  CompensatedSum dw, iw;
  for (std::size_t i = 0; i < s.size(); ++i) {
    dw += static_cast<double>(s[i].degree) * inv[i];
    iw += inv[i];
  }
  return {dw.value(), iw.value()};
}

// sum_{i<j} 1{s_i ~ s_j} / (w_i w_j), through per-node totals of 1/w.
inline double weighted_induced_pairs(const Sample& s, const std::vector<double>& inv) {
  std::unordered_map<node_t, double> inv_by_node;
  inv_by_node.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv_by_node[s[i].node] += inv[i];
  CompensatedSum twice;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double local = 0.0;
    for (node_t a : s.neighbors(i)) {
      const auto it = inv_by_node.find(a);
      if (it != inv_by_node.end()) local += it->second;
    }
    twice += local * inv[i];
  }
  return 0.5 * twice.value();
}

}  // namespace detail

// sum(deg/w) / sum(1/w)
inline double mean_degree_wis(const Sample& s) {
  if (s.empty()) throw config_error("mean degree needs a non-empty sample");
  const auto inv = inverse_weights(s);
  const auto sums = detail::weighted_degree_sums(s, inv);
  return sums.degree_over_w / sums.inv_w;
}

// Two-point corrected density.
inline double density_wis(const Sample& s) {
  if (s.size() < 2) throw config_error("density needs at least two samples");
  const auto inv = inverse_weights(s);
  return detail::weighted_induced_pairs(s, inv) / pairwise_product_sum(inv);
}

// sum(deg/w) * sum_{i<j} 1/(w_i w_j)  /  ( sum(1/w) * sum_{i<j} 1{edge}/(w_i w_j) )  + 1
inline RatioEstimate inda_wis_ratio(const Sample& s) {
  if (s.size() < 2) throw config_error("IND-A needs at least two samples");
  const auto inv = inverse_weights(s);
  const auto sums = detail::weighted_degree_sums(s, inv);
  return {sums.degree_over_w * pairwise_product_sum(inv), sums.inv_w * detail::weighted_induced_pairs(s, inv), 1.0};
}

inline EstimateOutcome inda_wis(const Sample& s) { return inda_wis_ratio(s).outcome(); }

// |A| |S| / n^xcol
inline RatioEstimate indb_uis_ratio(const Sample& s, const AuxiliarySet& a) {
  return {static_cast<double>(a.cardinality) * static_cast<double>(s.size()),
          static_cast<double>(count_cross_collisions(s, a))};
}

inline EstimateOutcome indb_uis(const Sample& s, const AuxiliarySet& a) { return indb_uis_ratio(s, a).outcome(); }

// |A| sum(1/w)  /  sum_s (1/w(s)) #{a in A : a = s}
inline RatioEstimate indb_wis_ratio(const Sample& s, const AuxiliarySet& a) {
  CompensatedSum inv_total, hits;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double inv = 1.0 / effective_weight(s, i);
    inv_total += inv;
    hits += inv * static_cast<double>(a.multiplicity(s[i].node));
  }
  return {static_cast<double>(a.cardinality) * inv_total.value(), hits.value()};
}

inline EstimateOutcome indb_wis(const Sample& s, const AuxiliarySet& a) { return indb_wis_ratio(s, a).outcome(); }

// IND-B with A built from the sample's own neighbor lists.
inline RatioEstimate indb_auto_ratio(const Sample& s, AuxMode mode = AuxMode::set) {
  const auto a = build_auxiliary(s, mode);
  if (s.meta.method == SamplingMethod::uis) return indb_uis_ratio(s, a);
  return indb_wis_ratio(s, a);
}

inline EstimateOutcome indb_auto(const Sample& s, AuxMode mode = AuxMode::set) { return indb_auto_ratio(s, mode).outcome(); }

}  // namespace gsize
