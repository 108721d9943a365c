#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "sample.hpp"

// Estimators that exploit node repetitions within the sample.
namespace gsize {

struct MleSolverConfig {
  double tolerance = 1e-9;  // relative, on N
  double cap = 1e12;        // largest N considered; beyond it the estimate is infinite
};

// |S1| |S2| / |S1 ∩ S2| over two duplicate-free node sets.
inline RatioEstimate capture_recapture_ratio(std::span<const node_t> first, std::span<const node_t> second) {
  if (first.empty() || second.empty()) throw config_error("capture-recapture needs two non-empty sets");
  std::vector<node_t> a(first.begin(), first.end()), b(second.begin(), second.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
    throw config_error("capture-recapture inputs must be duplicate-free");
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return {static_cast<double>(a.size()) * static_cast<double>(b.size()), static_cast<double>(common)};
}

inline EstimateOutcome capture_recapture(std::span<const node_t> first, std::span<const node_t> second) {
  return capture_recapture_ratio(first, second).outcome();
}

struct CaptureRecaptureSplit {
  std::vector<node_t> first;   // unique nodes of the first half, sorted
  std::vector<node_t> second;  // unique nodes of the second half, sorted
  std::size_t discarded = 0;   // within-half repeats dropped by de-duplication
};

// Seeded random split of S into halves of sizes floor(n/2) and ceil(n/2),
// each de-duplicated.
inline CaptureRecaptureSplit split_for_capture_recapture(const Sample& s, std::uint64_t seed) {
  if (s.size() < 2) throw config_error("capture-recapture needs at least two samples");
  std::vector<node_t> nodes(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) nodes[i] = s[i].node;
  Rng rng(seed);
  shuffle(nodes.begin(), nodes.end(), rng);
  const auto half = static_cast<std::ptrdiff_t>(nodes.size() / 2);
  CaptureRecaptureSplit out;
  out.first.assign(nodes.begin(), nodes.begin() + half);
  out.second.assign(nodes.begin() + half, nodes.end());
  for (auto* part : {&out.first, &out.second}) {
    std::sort(part->begin(), part->end());
    const auto before = part->size();
    part->erase(std::unique(part->begin(), part->end()), part->end());
    out.discarded += before - part->size();
  }
  return out;
}

inline EstimateOutcome capture_recapture_from_sample(const Sample& s, std::uint64_t seed) {
  const auto split = split_for_capture_recapture(s, seed);
  return capture_recapture(split.first, split.second);
}

namespace detail {

inline void check_unique_counts(std::uint64_t n, std::uint64_t n_unique) {
  if (n_unique == 0 || n == 0) throw config_error("need n >= 1 and n_unique >= 1");
  if (n_unique > n) throw config_error("n_unique cannot exceed n");
}

}  // namespace detail

// Solves n_unique = N (1 - exp(-n/N)) for N by bisection on [n_unique, cap].
// The left side increases in N towards n, so a root exists iff n_unique < n.
inline EstimateOutcome mle_unique_approx(std::uint64_t n, std::uint64_t n_unique, const MleSolverConfig& cfg = {}) {
  detail::check_unique_counts(n, n_unique);
  if (n_unique == n) return EstimateOutcome::no_collisions();
  const auto nd = static_cast<double>(n), target = static_cast<double>(n_unique);
  auto seen = [nd](double big_n) { return -big_n * std::expm1(-nd / big_n); };
  double lo = target, hi = cfg.cap;
  if (seen(hi) < target) return EstimateOutcome::no_collisions();
  while (hi - lo > cfg.tolerance * lo) {
    const double mid = 0.5 * (lo + hi);
    if (seen(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return EstimateOutcome::finite(0.5 * (lo + hi));
}

// log of (N+1)/(N+1-u) * (N/(N+1))^n; the exact MLE is the smallest integer
// N >= u where this is negative.
inline double mle_exact_log_predicate(double big_n, std::uint64_t n, std::uint64_t n_unique) {
  const auto u = static_cast<double>(n_unique);
  return -std::log1p(-u / (big_n + 1.0)) - static_cast<double>(n) * std::log1p(1.0 / big_n);
}

// Exponential doubling from N = n_unique to the first N satisfying the
// predicate, then binary search for the smallest such N.
inline EstimateOutcome mle_unique_exact(std::uint64_t n, std::uint64_t n_unique, const MleSolverConfig& cfg = {}) {
  detail::check_unique_counts(n, n_unique);
  if (n_unique == n) return EstimateOutcome::no_collisions();
  auto holds = [&](std::uint64_t big_n) { return mle_exact_log_predicate(static_cast<double>(big_n), n, n_unique) < 0.0; };
  const auto cap = static_cast<std::uint64_t>(cfg.cap);
  std::uint64_t lo = n_unique;
  if (holds(lo)) return EstimateOutcome::finite(static_cast<double>(lo));
  std::uint64_t step = 1, hi = lo;
  for (;;) {
    hi = lo + step;
    if (hi > cap) hi = cap;
    if (holds(hi)) break;
    if (hi == cap) return EstimateOutcome::no_collisions();
    lo = hi;
    step *= 2;
  }
  // holds(hi) and !holds(lo)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (holds(mid))
      hi = mid;
    else
      lo = mid;
  }
  return EstimateOutcome::finite(static_cast<double>(hi));
}

// n^2 / (2 n^col)
inline RatioEstimate node_uis_ratio(const Sample& s) {
  const auto n = static_cast<double>(s.size());
  return {n * n, 2.0 * static_cast<double>(count_collisions(s))};
}

inline EstimateOutcome node_uis(const Sample& s) { return node_uis_ratio(s).outcome(); }

// (sum w)(sum 1/w) / (2 n^col); reduces to node_uis for unit weights.
inline RatioEstimate node_wis_ratio(const Sample& s) {
  CompensatedSum w, inv;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double wi = effective_weight(s, i);
    w += wi;
    inv += 1.0 / wi;
  }
  return {w.value() * inv.value(), 2.0 * static_cast<double>(count_collisions(s))};
}

inline EstimateOutcome node_wis(const Sample& s) { return node_wis_ratio(s).outcome(); }

}  // namespace gsize
