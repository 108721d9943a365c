#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rng.hpp"

// Seeded synthetic topologies. Node ids are 0..N-1 in every generator.
namespace gsize::gen {

using edge_list = std::vector<std::pair<external_id, external_id>>;

namespace detail {

inline std::vector<external_id> iota_ids(std::size_t n) {
  std::vector<external_id> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

inline Graph finish(const edge_list& edges, std::size_t n) {
  const auto ids = iota_ids(n);
  return Graph::from_edges(edges, ids);
}

}  // namespace detail

inline Graph complete(std::size_t n) {
  if (n == 0) throw config_error("complete graph needs n >= 1");
  edge_list e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return detail::finish(e, n);
}

// Hub 0 with `leaves` leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  edge_list e;
  for (std::size_t l = 1; l <= leaves; ++l) e.emplace_back(0, l);
  return detail::finish(e, leaves + 1);
}

inline Graph path(std::size_t n) {
  if (n == 0) throw config_error("path needs n >= 1");
  edge_list e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return detail::finish(e, n);
}

// Erdos-Renyi G(n, p) using geometric skips over the upper-triangle pair index.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw config_error("G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw config_error("G(n,p) needs 0 <= p <= 1");
  edge_list e;
  if (p > 0.0 && n > 1) {
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      if (p >= 1.0) {
        ++w;
      } else {
        const double r = 1.0 - rng.uniform();  // (0, 1]
        w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
      }
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) e.emplace_back(static_cast<external_id>(w), static_cast<external_id>(v));
    }
  }
  return detail::finish(e, n);
}

// Preferential attachment: a seed clique of edges_per_node + 1 nodes, then each
// new node links to edges_per_node distinct targets chosen proportional to degree.
inline Graph barabasi_albert(std::size_t n, std::size_t edges_per_node, std::uint64_t seed) {
  const std::size_t m = edges_per_node;
  if (m == 0 || n < m + 1) throw config_error("preferential attachment needs edges_per_node >= 1 and n > edges_per_node");
  Rng rng(seed);
  edge_list e;
  std::vector<external_id> endpoints;  // each node repeated once per incident edge
  for (std::size_t u = 0; u <= m; ++u)
    for (std::size_t v = u + 1; v <= m; ++v) {
      e.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  std::vector<external_id> targets;
  for (std::size_t v = m + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const external_id t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (external_id t : targets) {
      e.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return detail::finish(e, n);
}

// `cliques` copies of K_size joined in a ring by one edge between consecutive cliques.
inline Graph ring_of_cliques(std::size_t cliques, std::size_t size) {
  if (cliques == 0 || size == 0) throw config_error("ring of cliques needs cliques >= 1 and size >= 1");
  edge_list e;
  for (std::size_t c = 0; c < cliques; ++c) {
    const std::size_t base = c * size;
    for (std::size_t u = 0; u < size; ++u)
      for (std::size_t v = u + 1; v < size; ++v) e.emplace_back(base + u, base + v);
    if (cliques > 1) {
      const std::size_t next = ((c + 1) % cliques) * size;
      e.emplace_back(base + size - 1, next);
    }
  }
  return detail::finish(e, cliques * size);
}

// Star of cliques: hub 0 attached to one node of each of `cliques` copies of K_size.
inline Graph star_of_cliques(std::size_t cliques, std::size_t size) {
  if (cliques == 0 || size == 0) throw config_error("star of cliques needs cliques >= 1 and size >= 1");
  edge_list e;
  for (std::size_t c = 0; c < cliques; ++c) {
    const std::size_t base = 1 + c * size;
    for (std::size_t u = 0; u < size; ++u)
      for (std::size_t v = u + 1; v < size; ++v) e.emplace_back(base + u, base + v);
    e.emplace_back(0, base);
  }
  return detail::finish(e, 1 + cliques * size);
}

// width x height 4-neighbor lattice; node id = row * width + col.
inline Graph grid_2d(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw config_error("grid needs positive dimensions");
  edge_list e;
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t v = r * width + c;
      if (c + 1 < width) e.emplace_back(v, v + 1);
      if (r + 1 < height) e.emplace_back(v, v + width);
    }
  return detail::finish(e, width * height);
}

// Parses "er:N:P", "ba:N:M", "ring:CLIQUES:SIZE", "starcliques:CLIQUES:SIZE",
// "grid:W:H", "complete:N", "star:LEAVES", "path:N". Random generators take
// `seed`.
inline Graph from_spec(std::string_view spec, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = spec.find(':', start);
    parts.emplace_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto count = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw config_error("generator spec '" + std::string(spec) + "' is missing arguments");
    const auto v = gsize::detail::parse_number<std::size_t>(parts[i]);
    if (!v) throw config_error("bad integer '" + parts[i] + "' in generator spec");
    return *v;
  };
  auto real = [&](std::size_t i) -> double {
    if (i >= parts.size()) throw config_error("generator spec '" + std::string(spec) + "' is missing arguments");
    const auto v = gsize::detail::parse_number<double>(parts[i]);
    if (!v) throw config_error("bad number '" + parts[i] + "' in generator spec");
    return *v;
  };
  const std::string& kind = parts[0];
  if (kind == "er") return erdos_renyi(count(1), real(2), seed);
  if (kind == "ba") return barabasi_albert(count(1), count(2), seed);
  if (kind == "ring") return ring_of_cliques(count(1), count(2));
  if (kind == "starcliques") return star_of_cliques(count(1), count(2));
  if (kind == "grid") return grid_2d(count(1), count(2));
  if (kind == "complete") return complete(count(1));
  if (kind == "star") return star(count(1));
  if (kind == "path") return path(count(1));
  throw config_error("unknown generator '" + kind + "'");
}

}  // namespace gsize::gen
