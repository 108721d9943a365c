#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gsize {

using node_t = std::uint32_t;
using external_id = std::uint64_t;

struct LoadReport {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

struct GraphStats {
  double mean_degree = 0.0;
  double mean_square_degree = 0.0;
  double density = 0.0;
  std::optional<std::size_t> diameter_hint;
};

// Immutable undirected simple graph in CSR form. Dense indices are assigned in
// increasing order of external id, so the same edge set always produces the
// same indexing regardless of input order.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from external-id pairs. Self-loops are dropped (their
  // endpoint still becomes a node) and parallel edges collapse.
  static Graph from_edges(std::span<const std::pair<external_id, external_id>> edges,
                          LoadReport* report = nullptr) {
    return from_edges(edges, {}, report);
  }

  // As above, with additional nodes that may have no incident edges.
  static Graph from_edges(std::span<const std::pair<external_id, external_id>> edges,
                          std::span<const external_id> nodes, LoadReport* report = nullptr) {
    std::vector<external_id> ids(nodes.begin(), nodes.end());
    ids.reserve(ids.size() + edges.size() * 2);
    for (const auto& [u, v] : edges) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw data_error("graph has no nodes");

    Graph g;
    g.ids_ = std::move(ids);
    g.index_.reserve(g.ids_.size());
    for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_.emplace(g.ids_[i], static_cast<node_t>(i));

    std::vector<std::pair<node_t, node_t>> pairs;
    pairs.reserve(edges.size());
    std::size_t loops = 0;
    for (const auto& [u, v] : edges) {
      if (u == v) {
        ++loops;
        continue;
      }
      node_t a = g.index_.at(u), b = g.index_.at(v);
      if (a > b) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    const auto before = pairs.size();
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (report) {
      report->self_loops += loops;
      report->duplicate_edges += before - pairs.size();
    }
    g.build_csr(pairs);
    return g;
  }

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::size_t degree(node_t v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const node_t> neighbors(node_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(node_t u, node_t v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  external_id external(node_t v) const { return ids_[v]; }
  std::span<const external_id> external_ids() const noexcept { return ids_; }

  std::optional<node_t> index_of(external_id id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t component_count() const noexcept { return component_count_; }
  bool connected() const noexcept { return component_count_ == 1; }
  // Component label of v; labels follow the smallest dense index in each component.
  std::size_t component_of(node_t v) const { return component_[v]; }

  // FNV-1a over node count and the canonical external-id edge list.
  std::uint64_t digest() const noexcept { return digest_; }

  // Subgraph induced on `keep` (dense indices, any order); ids are retained.
  Graph induced(std::span<const node_t> keep) const {
    std::vector<char> in(node_count(), 0);
    for (node_t v : keep) in[v] = 1;
    std::vector<std::pair<external_id, external_id>> edges;
    std::vector<external_id> nodes;
    for (node_t u = 0; u < node_count(); ++u) {
      if (!in[u]) continue;
      nodes.push_back(ids_[u]);
      for (node_t v : neighbors(u))
        if (u < v && in[v]) edges.emplace_back(ids_[u], ids_[v]);
    }
    return from_edges(edges, nodes);
  }

 private:
  void build_csr(const std::vector<std::pair<node_t, node_t>>& pairs) {
    const std::size_t n = ids_.size();
    offsets_.assign(n + 1, 0);
    for (const auto& [a, b] : pairs) {
      ++offsets_[a + 1];
      ++offsets_[b + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(pairs.size() * 2);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [a, b] : pairs) {
      adjacency_[fill[a]++] = b;
      adjacency_[fill[b]++] = a;
    }
    for (std::size_t v = 0; v < n; ++v)
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    label_components();
    digest_ = compute_digest();
  }

  std::uint64_t compute_digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::uint64_t x) {
      for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    };
    feed(node_count());
    for (node_t u = 0; u < node_count(); ++u) {
      feed(ids_[u]);
      for (node_t v : neighbors(u))
        if (u < v) feed(ids_[v]);
    }
    return h;
  }

  void label_components() {
    const std::size_t n = ids_.size();
    constexpr auto unset = static_cast<std::size_t>(-1);
    component_.assign(n, unset);
    component_count_ = 0;
    std::vector<node_t> stack;
    for (node_t s = 0; s < n; ++s) {
      if (component_[s] != unset) continue;
      component_[s] = component_count_;
      stack.push_back(s);
      while (!stack.empty()) {
        const node_t u = stack.back();
        stack.pop_back();
        for (node_t v : neighbors(u)) {
          if (component_[v] == unset) {
            component_[v] = component_count_;
            stack.push_back(v);
          }
        }
      }
      ++component_count_;
    }
  }

  std::vector<std::size_t> offsets_;
  std::vector<node_t> adjacency_;
  std::vector<external_id> ids_;
  std::unordered_map<external_id, node_t> index_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
  std::uint64_t digest_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace detail

// Whitespace-separated id pairs, one edge per line. Blank lines and lines
// starting with '#' or '%' are skipped.
inline Graph load_edge_list(std::istream& in, LoadReport* report = nullptr) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  std::vector<std::pair<external_id, external_id>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ++rep.lines;
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '#' || t.front() == '%') {
      ++rep.comment_lines;
      continue;
    }
    const auto tok = detail::split_ws(t);
    if (tok.size() != 2) throw parse_error(lineno, "expected two node ids, got " + std::to_string(tok.size()) + " fields");
    const auto u = detail::parse_number<external_id>(tok[0]);
    const auto v = detail::parse_number<external_id>(tok[1]);
    if (!u || !v) throw parse_error(lineno, "node ids must be unsigned 64-bit integers");
    edges.emplace_back(*u, *v);
  }
  if (edges.empty()) throw data_error("edge list is empty");
  return Graph::from_edges(edges, &rep);
}

// Canonical edge list; reloading it reproduces the same graph. Isolated nodes
// are written as self-loops so they survive the round trip.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (node_t u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == 0) out << g.external(u) << ' ' << g.external(u) << '\n';
    for (node_t v : g.neighbors(u))
      if (u < v) out << g.external(u) << ' ' << g.external(v) << '\n';
  }
}

// Ties between equally large components go to the one holding the smallest
// external id, i.e. the smallest component label.
inline Graph largest_connected_component(const Graph& g) {
  if (g.connected()) return g;
  std::vector<std::size_t> sizes(g.component_count(), 0);
  for (node_t v = 0; v < g.node_count(); ++v) ++sizes[g.component_of(v)];
  const auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<node_t> keep;
  keep.reserve(sizes[best]);
  for (node_t v = 0; v < g.node_count(); ++v)
    if (g.component_of(v) == best) keep.push_back(v);
  return g.induced(keep);
}

inline GraphStats exact_stats(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw data_error("density is undefined for graphs with fewer than 2 nodes");
  double sum_sq = 0.0;
  for (node_t v = 0; v < n; ++v) {
    const auto d = static_cast<double>(g.degree(v));
    sum_sq += d * d;
  }
  const auto nn = static_cast<double>(n);
  const auto two_e = 2.0 * static_cast<double>(g.edge_count());
  GraphStats s;
  s.mean_degree = two_e / nn;
  s.mean_square_degree = sum_sq / nn;
  s.density = two_e / (nn * (nn - 1.0));
  return s;
}

// N = <k>/rho + 1, evaluated from the exact statistics.
inline double size_identity(const Graph& g) {
  const auto s = exact_stats(g);
  if (g.edge_count() == 0) throw data_error("graph has no edges; density is zero");
  return s.mean_degree / s.density + 1.0;
}

}  // namespace gsize
