#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "ind_estimators.hpp"
#include "node_estimators.hpp"
#include "sample.hpp"

// Dependence reduction for random-walk samples.
//
// Thinning keeps every theta-th record (simple) or splits the walk into theta
// interleaved subsamples whose ratio terms are pooled (shifted). Margin keeps
// the whole walk but drops every ordered pair (i, j) with |j - i| <= m, or,
// for several independent walkers, every pair from the same walker.
namespace gsize {

struct ThinningConfig {
  std::size_t theta = 1;
};

enum class PairFilter { index_distance, cross_walker };

struct MarginConfig {
  std::size_t m = 0;
  PairFilter filter = PairFilter::index_distance;
};

// ---------------------------------------------------------------------------
// Thinning

namespace detail {

inline Sample strided(const Sample& s, std::size_t start, std::size_t stride, std::string note) {
  Sample out;
  out.meta = s.meta;
  out.meta.note = s.meta.note.empty() ? std::move(note) : s.meta.note + "," + note;
  const std::size_t count = start < s.size() ? (s.size() - start + stride - 1) / stride : 0;
  out.reserve(count, 0);
  for (std::size_t i = start; i < s.size(); i += stride) out.push_back(s[i], s.neighbors(i));
  return out;
}

inline void check_theta(const ThinningConfig& cfg) {
  if (cfg.theta == 0) throw config_error("theta must be >= 1");
}

}  // namespace detail

// [s_0, s_theta, s_2theta, ...]; records keep their original positions.
inline Sample thin_simple(const Sample& s, ThinningConfig cfg) {
  detail::check_theta(cfg);
  return detail::strided(s, 0, cfg.theta, "thin=" + std::to_string(cfg.theta));
}

// theta subsamples S'_k = [s_k, s_{k+theta}, ...], k = 0..theta-1. When
// theta > n the trailing subsamples are empty.
inline std::vector<Sample> thin_shifted(const Sample& s, ThinningConfig cfg) {
  detail::check_theta(cfg);
  std::vector<Sample> parts;
  parts.reserve(cfg.theta);
  for (std::size_t k = 0; k < cfg.theta; ++k)
    parts.push_back(detail::strided(s, k, cfg.theta, "thin=" + std::to_string(cfg.theta) + ":" + std::to_string(k)));
  return parts;
}

enum class ThinnedBase { node_wis, indb_auto };

inline RatioEstimate estimate_thinned_ratio(const Sample& s, ThinningConfig cfg, ThinnedBase base, bool shifted,
                                            AuxMode mode = AuxMode::set) {
  auto one = [&](const Sample& part) {
    return base == ThinnedBase::node_wis ? node_wis_ratio(part) : indb_auto_ratio(part, mode);
  };
  if (!shifted) return one(thin_simple(s, cfg));
  const auto parts = thin_shifted(s, cfg);
  std::vector<RatioEstimate> ratios;
  ratios.reserve(parts.size());
  for (const auto& p : parts) ratios.push_back(one(p));
  return pool_ratios(ratios);
}

inline EstimateOutcome estimate_thinned(const Sample& s, ThinningConfig cfg, ThinnedBase base, bool shifted,
                                        AuxMode mode = AuxMode::set) {
  return estimate_thinned_ratio(s, cfg, base, shifted, mode).outcome();
}

// ---------------------------------------------------------------------------
// Margin

namespace detail {

inline std::vector<std::vector<std::size_t>> walker_groups(const Sample& s) {
  std::vector<std::vector<std::size_t>> groups(s.walker_count());
  for (std::size_t i = 0; i < s.size(); ++i) groups[s[i].walker].push_back(i);
  return groups;
}

// Walks the sample once, keeping an "excluded" window of records that may not
// pair with the visited record i. For the index filter the window is
// [i - m, i + m]; for the cross-walker filter it is i's whole walker. Each
// record enters and leaves the window once.
template <typename Add, typename Remove, typename Visit>
void sweep_excluded(const Sample& s, const MarginConfig& cfg, Add add, Remove remove, Visit visit) {
  const std::size_t n = s.size();
  if (cfg.filter == PairFilter::index_distance) {
    std::size_t next = 0;  // first record not yet added
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t last = cfg.m >= n - 1 - i ? n - 1 : i + cfg.m;
      while (next <= last) add(next++);
      if (i > cfg.m) remove(i - cfg.m - 1);
      visit(i);
    }
    return;
  }
  for (const auto& group : walker_groups(s)) {
    for (std::size_t j : group) add(j);
    for (std::size_t i : group) visit(i);
    for (std::size_t j : group) remove(j);
  }
}

// For every i, the sum of x_j over records j allowed to pair with i. Built
// from prefix/suffix accumulations of non-negative terms only.
inline std::vector<double> far_sums(const Sample& s, const std::vector<double>& x, const MarginConfig& cfg) {
  const std::size_t n = s.size();
  std::vector<double> out(n, 0.0);
  if (cfg.filter == PairFilter::index_distance) {
    std::vector<double> prefix(n + 1, 0.0), suffix(n + 1, 0.0);
    CompensatedSum acc;
    for (std::size_t k = 0; k < n; ++k) {
      acc += x[k];
      prefix[k + 1] = acc.value();
    }
    acc = {};
    for (std::size_t k = n; k-- > 0;) {
      acc += x[k];
      suffix[k] = acc.value();
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > cfg.m ? prefix[i - cfg.m] : 0.0;
      const double right = cfg.m < n - 1 - i ? suffix[i + cfg.m + 1] : 0.0;
      out[i] = left + right;
    }
    return out;
  }
  const auto groups = walker_groups(s);
  const std::size_t k = groups.size();
  std::vector<double> group_sum(k, 0.0);
  for (std::size_t g = 0; g < k; ++g) {
    CompensatedSum acc;
    for (std::size_t j : groups[g]) acc += x[j];
    group_sum[g] = acc.value();
  }
  std::vector<double> before(k + 1, 0.0), after(k + 1, 0.0);
  for (std::size_t g = 0; g < k; ++g) before[g + 1] = before[g] + group_sum[g];
  for (std::size_t g = k; g-- > 0;) after[g] = after[g + 1] + group_sum[g];
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t i : groups[g]) out[i] = before[g] + after[g + 1];
  return out;
}

inline void check_margin(const Sample& s) {
  if (s.empty()) throw config_error("margin estimators need a non-empty sample");
}

// Index filter in one pass: record j pairs with every i <= j - m - 1, whose
// weight and node enter the running totals m + 1 steps behind j. Each
// unordered pair contributes w_i / w_j + w_j / w_i and, on a collision, 2.
template <typename Seen>
RatioEstimate node_margin_index(const Sample& s, std::size_t m, Seen& seen) {
  CompensatedSum num, w_sum, inv_sum;
  std::uint64_t same = 0;
  for (std::size_t j = m + 1; j < s.size(); ++j) {
    const std::size_t i = j - m - 1;
    const double wi = effective_weight(s, i);
    w_sum += wi;
    inv_sum += 1.0 / wi;
    ++seen[s[i].node];
    const double wj = effective_weight(s, j);
    num += w_sum.value() / wj + inv_sum.value() * wj;
    same += seen[s[j].node];
  }
  return {num.value(), 2.0 * static_cast<double>(same)};
}

template <typename Count>
RatioEstimate node_margin_walkers(const Sample& s, const MarginConfig& cfg, Count& count) {
  const auto inv = inverse_weights(s);
  const auto far_inv = far_sums(s, inv, cfg);
  CompensatedSum num;
  for (std::size_t i = 0; i < s.size(); ++i) num += effective_weight(s, i) * far_inv[i];
  // count[v] = (occurrences overall, occurrences inside the excluded window)
  for (const auto& r : s.records()) ++count[r.node].first;
  std::uint64_t pairs = 0;
  sweep_excluded(
      s, cfg, [&](std::size_t j) { ++count[s[j].node].second; }, [&](std::size_t j) { --count[s[j].node].second; },
      [&](std::size_t i) {
        const auto& c = count[s[i].node];
        pairs += c.first - c.second;
      });
  return {num.value(), static_cast<double>(pairs)};
}

// Size of a flat per-node table, or 0 when node indices are too sparse for one.
inline std::size_t flat_table_size(const Sample& s) {
  std::size_t table = 0;
  for (const auto& r : s.records()) table = std::max<std::size_t>(table, std::size_t{r.node} + 1);
  return table <= 4 * s.size() + 1024 ? table : 0;
}

}  // namespace detail

// sum_{(i,j) kept} w_i / w_j  /  #{(i,j) kept : s_i = s_j}, over ordered pairs.
inline RatioEstimate node_margin_ratio(const Sample& s, const MarginConfig& cfg) {
  detail::check_margin(s);
  for (std::size_t i = 0; i < s.size(); ++i) effective_weight(s, i);
  const std::size_t table = detail::flat_table_size(s);
  if (cfg.filter == PairFilter::index_distance) {
    if (table > 0 && s.size() <= UINT32_MAX) {
      std::vector<std::uint32_t> seen(table);
      return detail::node_margin_index(s, cfg.m, seen);
    }
    std::unordered_map<node_t, std::uint64_t> seen;
    seen.reserve(s.size());
    return detail::node_margin_index(s, cfg.m, seen);
  }
  using Count = std::pair<std::uint64_t, std::uint64_t>;
  if (table > 0) {
    std::vector<Count> count(table);
    return detail::node_margin_walkers(s, cfg, count);
  }
  std::unordered_map<node_t, Count> count;
  count.reserve(s.size());
  return detail::node_margin_walkers(s, cfg, count);
}

inline EstimateOutcome node_margin(const Sample& s, const MarginConfig& cfg) { return node_margin_ratio(s, cfg).outcome(); }

// IND-B over a walk with the pair filter applied.
//
// For each record i let A_i be the neighbor lists of the records allowed to
// pair with i (kept as a multiset, or de-duplicated in set mode). Then
//
//   estimate = sum_i |A_i| / w_i  /  sum_i mult(s_i in A_i) / w_i
//
// where mult is the multiplicity (multiset) or membership (set). The multiset
// form equals
//
//   sum_{(i,j) kept} deg(s_i) / w(s_j)  /  sum_{(i,j) kept} 1{s_i in N(s_j)} / w(s_i)
//
// and with no pairs filtered the set form is IND-B with A = union of N(s).
inline RatioEstimate ind_margin_ratio(const Sample& s, const MarginConfig& cfg, AuxMode mode = AuxMode::set) {
  detail::check_margin(s);
  const std::size_t n = s.size();
  const auto inv = inverse_weights(s);

  // Per neighbor node a: how many records list a overall, and inside the window.
  struct Tally {
    std::uint64_t total = 0;
    std::uint64_t window = 0;
  };
  std::unordered_map<node_t, Tally> tally;
  tally.reserve(s.neighbor_total());
  for (std::size_t j = 0; j < n; ++j)
    for (node_t a : s.neighbors(j)) ++tally[a].total;
  const std::uint64_t distinct = tally.size();
  std::uint64_t covered = 0;  // nodes all of whose listings are in the window
  std::uint64_t window_listings = 0;

  auto remaining = [&](node_t v) -> std::uint64_t {
    const auto it = tally.find(v);
    return it == tally.end() ? 0 : it->second.total - it->second.window;
  };

  CompensatedSum num, den;
  auto add = [&](std::size_t j) {
    for (node_t a : s.neighbors(j)) {
      auto& t = tally[a];
      if (++t.window == t.total) ++covered;
    }
    window_listings += s[j].degree;
  };
  auto remove = [&](std::size_t j) {
    for (node_t a : s.neighbors(j)) {
      auto& t = tally[a];
      if (t.window-- == t.total) --covered;
    }
    window_listings -= s[j].degree;
  };
  auto visit = [&](std::size_t i) {
    const std::uint64_t hits = remaining(s[i].node);
    if (mode == AuxMode::multiset) {
      num += static_cast<double>(s.neighbor_total() - window_listings) * inv[i];
      den += static_cast<double>(hits) * inv[i];
    } else {
      num += static_cast<double>(distinct - covered) * inv[i];
      if (hits > 0) den += inv[i];
    }
  };
  detail::sweep_excluded(s, cfg, add, remove, visit);
  return {num.value(), den.value()};
}

inline EstimateOutcome ind_margin(const Sample& s, const MarginConfig& cfg, AuxMode mode = AuxMode::set) {
  return ind_margin_ratio(s, cfg, mode).outcome();
}

enum class MarginBase { node, ind };

// Margin estimators restricted to pairs from different walkers.
inline RatioEstimate margin_crosswalker_ratio(const Sample& s, MarginBase base, AuxMode mode = AuxMode::set) {
  const MarginConfig cfg{0, PairFilter::cross_walker};
  return base == MarginBase::node ? node_margin_ratio(s, cfg) : ind_margin_ratio(s, cfg, mode);
}

inline EstimateOutcome margin_crosswalker(const Sample& s, MarginBase base, AuxMode mode = AuxMode::set) {
  return margin_crosswalker_ratio(s, base, mode).outcome();
}

// ---------------------------------------------------------------------------
// Pair accounting

enum class PairScheme { simple_thinning, shifted_thinning, margin };

// Exact number of ordered pairs (i, j), i != j, each scheme lets an estimator
// use. `param` is theta for thinning and m for margin.
inline std::uint64_t surviving_pair_count(std::uint64_t n, PairScheme scheme, std::uint64_t param) {
  switch (scheme) {
    case PairScheme::simple_thinning: {
      if (param == 0) throw config_error("theta must be >= 1");
      const std::uint64_t len = (n + param - 1) / param;
      return len == 0 ? 0 : len * (len - 1);
    }
    case PairScheme::shifted_thinning: {
      if (param == 0) throw config_error("theta must be >= 1");
      std::uint64_t total = 0;
      for (std::uint64_t k = 0; k < param && k < n; ++k) {
        const std::uint64_t len = (n - k + param - 1) / param;
        total += len * (len - 1);
      }
      return total;
    }
    case PairScheme::margin:
      if (n == 0 || param >= n - 1) return 0;
      return (n - param - 1) * (n - param);
  }
  return 0;
}

}  // namespace gsize
