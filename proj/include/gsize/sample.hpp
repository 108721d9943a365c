#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace gsize {

enum class SamplingMethod { uis, wis, rw, rw_multi };

inline std::string_view to_string(SamplingMethod m) {
  switch (m) {
    case SamplingMethod::uis: return "UIS";
    case SamplingMethod::wis: return "WIS";
    case SamplingMethod::rw: return "RW";
    case SamplingMethod::rw_multi: return "RW_MULTI";
  }
  return "?";
}

inline std::optional<SamplingMethod> parse_method(std::string_view s) {
  if (s == "UIS" || s == "uis") return SamplingMethod::uis;
  if (s == "WIS" || s == "wis") return SamplingMethod::wis;
  if (s == "RW" || s == "rw") return SamplingMethod::rw;
  if (s == "RW_MULTI" || s == "rw_multi" || s == "rw-multi") return SamplingMethod::rw_multi;
  return std::nullopt;
}

inline bool is_walk(SamplingMethod m) { return m == SamplingMethod::rw || m == SamplingMethod::rw_multi; }

struct SampleRecord {
  std::size_t position = 0;  // index in the originating sample
  node_t node = 0;
  std::uint32_t degree = 0;
  double weight = 1.0;
  std::uint32_t walker = 0;
};

struct SampleMeta {
  SamplingMethod method = SamplingMethod::uis;
  std::uint64_t seed = 0;
  std::string rng{rng_name};
  std::string weight_rule = "unit";
  std::uint64_t graph_digest = 0;
  std::string note;  // derivation trail, e.g. "thin=5"
};

// Ordered sample with a snapshot of every record's neighbor list, so
// estimation never touches the source graph.
class Sample {
 public:
  SampleMeta meta;

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  const SampleRecord& operator[](std::size_t i) const { return records_[i]; }
  std::span<const SampleRecord> records() const noexcept { return records_; }

  std::span<const node_t> neighbors(std::size_t i) const {
    return {pool_.data() + offsets_[i], pool_.data() + offsets_[i + 1]};
  }

  std::size_t neighbor_total() const noexcept { return pool_.size(); }

  void reserve(std::size_t records, std::size_t neighbors) {
    records_.reserve(records);
    offsets_.reserve(records + 1);
    pool_.reserve(neighbors);
  }

  // neighbors must be sorted; degree is taken from their count.
  void push_back(SampleRecord rec, std::span<const node_t> neighbors) {
    rec.degree = static_cast<std::uint32_t>(neighbors.size());
    records_.push_back(rec);
    pool_.insert(pool_.end(), neighbors.begin(), neighbors.end());
    offsets_.push_back(pool_.size());
  }

  std::uint32_t walker_count() const {
    std::uint32_t k = 0;
    for (const auto& r : records_) k = std::max(k, r.walker + 1);
    return k;
  }

 private:
  std::vector<SampleRecord> records_;
  std::vector<std::size_t> offsets_{0};
  std::vector<node_t> pool_;
};

// Node weight function with a stable name for sample metadata.
struct WeightRule {
  std::string name;
  std::function<double(const Graph&, node_t)> weight;

  static WeightRule unit() {
    return {"unit", [](const Graph&, node_t) { return 1.0; }};
  }
  static WeightRule degree() {
    return {"degree", [](const Graph& g, node_t v) { return static_cast<double>(g.degree(v)); }};
  }
};

inline std::optional<WeightRule> parse_weight_rule(std::string_view s) {
  if (s == "unit") return WeightRule::unit();
  if (s == "degree") return WeightRule::degree();
  return std::nullopt;
}

namespace detail {

inline void append(Sample& s, const Graph& g, node_t v, double weight, std::uint32_t walker) {
  SampleRecord r;
  r.position = s.size();
  r.node = v;
  r.weight = weight;
  r.walker = walker;
  s.push_back(r, g.neighbors(v));
}

inline void check_positive(double w, node_t v) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw data_error("node index " + std::to_string(v) + " has non-positive weight " + std::to_string(w));
}

}  // namespace detail

// n uniform draws with replacement; weight 1.
inline Sample sample_uis(const Graph& g, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw config_error("sample size must be >= 1");
  Rng rng(seed);
  Sample s;
  s.meta.method = SamplingMethod::uis;
  s.meta.seed = seed;
  s.meta.graph_digest = g.digest();
  for (std::size_t i = 0; i < n; ++i) detail::append(s, g, static_cast<node_t>(rng.below(g.node_count())), 1.0, 0);
  return s;
}

// Cumulative weight table; each draw is a binary search, O(log N).
class WeightedNodeTable {
 public:
  WeightedNodeTable(const Graph& g, WeightRule rule) : graph_(&g), rule_(std::move(rule)) {
    cumulative_.reserve(g.node_count());
    weights_.reserve(g.node_count());
    double total = 0.0;
    for (node_t v = 0; v < g.node_count(); ++v) {
      const double w = rule_.weight(g, v);
      detail::check_positive(w, v);
      weights_.push_back(w);
      total += w;
      cumulative_.push_back(total);
    }
  }

  node_t draw(Rng& rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<node_t>(std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1));
  }

  Sample sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw config_error("sample size must be >= 1");
    Rng rng(seed);
    Sample s;
    s.meta.method = SamplingMethod::wis;
    s.meta.seed = seed;
    s.meta.weight_rule = rule_.name;
    s.meta.graph_digest = graph_->digest();
    for (std::size_t i = 0; i < n; ++i) {
      const node_t v = draw(rng);
      detail::append(s, *graph_, v, weights_[v], 0);
    }
    return s;
  }

 private:
  const Graph* graph_;
  WeightRule rule_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

// n i.i.d. draws with P(v) proportional to rule.weight(v).
inline Sample sample_wis(const Graph& g, const WeightRule& rule, std::size_t n, std::uint64_t seed) {
  return WeightedNodeTable(g, rule).sample(n, seed);
}

namespace detail {

inline void walk(Sample& s, const Graph& g, std::size_t n, Rng& rng, std::optional<node_t> start, std::uint32_t walker) {
  if (!g.connected())
    throw data_error("random walk needs a connected graph; extract the largest connected component first");
  node_t cur = start ? *start : static_cast<node_t>(rng.below(g.node_count()));
  if (cur >= g.node_count()) throw config_error("start node out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const auto nb = g.neighbors(cur);
      if (nb.empty()) throw data_error("random walk stuck at a node without neighbors");
      cur = nb[rng.below(nb.size())];
    }
    append(s, g, cur, static_cast<double>(g.degree(cur)), walker);
  }
}

}  // namespace detail

// Simple random walk of n nodes (n - 1 steps). Records carry weight = degree,
// the walk's stationary weight. Without `start`, the first node is drawn
// uniformly from the seed stream.
inline Sample sample_rw(const Graph& g, std::size_t n, std::uint64_t seed, std::optional<node_t> start = std::nullopt) {
  if (n == 0) throw config_error("sample size must be >= 1");
  Rng rng(seed);
  Sample s;
  s.meta.method = SamplingMethod::rw;
  s.meta.seed = seed;
  s.meta.weight_rule = "degree";
  s.meta.graph_digest = g.digest();
  detail::walk(s, g, n, rng, start, 0);
  return s;
}

// k independent walks of per_walk nodes each, concatenated; walker ids 0..k-1.
inline Sample sample_rw_multi(const Graph& g, std::size_t walkers, std::size_t per_walk, std::span<const std::uint64_t> seeds) {
  if (walkers == 0) throw config_error("need at least one walker");
  if (seeds.size() != walkers) throw config_error("need exactly one seed per walker");
  if (per_walk == 0) throw config_error("walk length must be >= 1");
  Sample s;
  // A single walker is an ordinary walk, identical to sample_rw(g, per_walk, seeds[0]).
  s.meta.method = walkers == 1 ? SamplingMethod::rw : SamplingMethod::rw_multi;
  s.meta.seed = seeds[0];
  s.meta.weight_rule = "degree";
  s.meta.graph_digest = g.digest();
  for (std::size_t k = 0; k < walkers; ++k) {
    Rng rng(seeds[k]);
    detail::walk(s, g, per_walk, rng, std::nullopt, static_cast<std::uint32_t>(k));
  }
  return s;
}

// Walker seeds derived from one base seed.
inline std::vector<std::uint64_t> walker_seeds(std::uint64_t base, std::size_t walkers) {
  std::vector<std::uint64_t> out(walkers);
  for (std::size_t k = 0; k < walkers; ++k) out[k] = mix_seed(base + k);
  return out;
}

}  // namespace gsize
