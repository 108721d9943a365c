#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "sample.hpp"

// Line-oriented sample files.
//
//   #gsize-sample v1 method=RW seed=42 rng=mt19937_64 weight_rule=degree graph_digest=0123456789abcdef n=3 [note=...]
//   <position> <node id> <degree> <weight> <walker> <neighbor ids, comma separated, or '-'>
//
// Header fields are space-separated key=value pairs in the order shown; `note`
// is optional and holds no whitespace. Ids are unsigned decimal, the digest is
// 16 lowercase hex digits, weights use the shortest decimal form that
// round-trips to the same double. Lines end with '\n'.
namespace gsize {

inline constexpr std::string_view sample_magic = "#gsize-sample";
inline constexpr std::string_view sample_version = "v1";

inline std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline std::string format_hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// `ids` maps each node index in the sample to its external id.
inline void write_sample(std::ostream& out, const Sample& s, std::span<const external_id> ids) {
  out << sample_magic << ' ' << sample_version << " method=" << to_string(s.meta.method) << " seed=" << s.meta.seed
      << " rng=" << s.meta.rng << " weight_rule=" << s.meta.weight_rule
      << " graph_digest=" << format_hex64(s.meta.graph_digest) << " n=" << s.size();
  if (!s.meta.note.empty()) out << " note=" << s.meta.note;
  out << '\n';
  std::string line;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& r = s[i];
    line.clear();
    line += std::to_string(r.position);
    line += ' ';
    line += std::to_string(ids[r.node]);
    line += ' ';
    line += std::to_string(r.degree);
    line += ' ';
    line += format_double(r.weight);
    line += ' ';
    line += std::to_string(r.walker);
    line += ' ';
    const auto nb = s.neighbors(i);
    if (nb.empty()) line += '-';
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (k) line += ',';
      line += std::to_string(ids[nb[k]]);
    }
    line += '\n';
    out << line;
  }
}

inline void write_sample(std::ostream& out, const Sample& s, const Graph& g) { write_sample(out, s, g.external_ids()); }

struct SampleFile {
  Sample sample;
  std::vector<external_id> ids;  // node index -> external id
};

// Node indices in the result are local to the file: every id that appears
// (sampled or neighbor) gets an index in increasing id order.
inline SampleFile read_sample(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw data_error("sample file is empty");
  auto header = detail::split_ws(line);
  if (header.size() < 2 || header[0] != sample_magic) throw parse_error(1, "missing '#gsize-sample' header");
  if (header[1] != sample_version) throw parse_error(1, "unsupported sample format version '" + std::string(header[1]) + "'");
  std::map<std::string, std::string, std::less<>> kv;
  for (std::size_t i = 2; i < header.size(); ++i) {
    const auto eq = header[i].find('=');
    if (eq == std::string_view::npos) throw parse_error(1, "header field '" + std::string(header[i]) + "' is not key=value");
    kv.emplace(std::string(header[i].substr(0, eq)), std::string(header[i].substr(eq + 1)));
  }
  auto need = [&](std::string_view key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw parse_error(1, "header lacks '" + std::string(key) + "'");
    return it->second;
  };

  SampleMeta meta;
  const auto method = parse_method(need("method"));
  if (!method) throw parse_error(1, "unknown method '" + need("method") + "'");
  meta.method = *method;
  const auto seed = detail::parse_number<std::uint64_t>(need("seed"));
  if (!seed) throw parse_error(1, "bad seed");
  meta.seed = *seed;
  meta.rng = need("rng");
  meta.weight_rule = need("weight_rule");
  {
    const auto& d = need("graph_digest");
    std::uint64_t digest = 0;
    const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), digest, 16);
    if (ec != std::errc{} || ptr != d.data() + d.size()) throw parse_error(1, "bad graph_digest");
    meta.graph_digest = digest;
  }
  const auto n = detail::parse_number<std::size_t>(need("n"));
  if (!n) throw parse_error(1, "bad n");
  if (const auto it = kv.find("note"); it != kv.end()) meta.note = it->second;

  struct Row {
    std::size_t position;
    external_id node;
    std::uint32_t degree;
    double weight;
    std::uint32_t walker;
    std::vector<external_id> neighbors;
  };
  std::vector<Row> rows;
  rows.reserve(*n);
  std::vector<external_id> all_ids;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    const auto f = detail::split_ws(t);
    if (f.size() != 6) throw parse_error(lineno, "expected 6 fields, got " + std::to_string(f.size()));
    Row r{};
    const auto pos = detail::parse_number<std::size_t>(f[0]);
    const auto id = detail::parse_number<external_id>(f[1]);
    const auto deg = detail::parse_number<std::uint32_t>(f[2]);
    const auto w = detail::parse_number<double>(f[3]);
    const auto walker = detail::parse_number<std::uint32_t>(f[4]);
    if (!pos || !id || !deg || !w || !walker) throw parse_error(lineno, "malformed numeric field");
    if (!(*w > 0.0) || !std::isfinite(*w)) throw parse_error(lineno, "weight must be positive");
    if (!rows.empty() && *pos <= rows.back().position) throw parse_error(lineno, "positions must increase");
    r.position = *pos;
    r.node = *id;
    r.degree = *deg;
    r.weight = *w;
    r.walker = *walker;
    if (f[5] != "-") {
      std::size_t start = 0;
      const auto list = f[5];
      for (;;) {
        const auto comma = list.find(',', start);
        const auto nb = detail::parse_number<external_id>(list.substr(start, comma - start));
        if (!nb) throw parse_error(lineno, "malformed neighbor id");
        r.neighbors.push_back(*nb);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (r.neighbors.size() != r.degree) throw parse_error(lineno, "degree does not match neighbor count");
    std::sort(r.neighbors.begin(), r.neighbors.end());
    if (std::adjacent_find(r.neighbors.begin(), r.neighbors.end()) != r.neighbors.end())
      throw parse_error(lineno, "duplicate neighbor id");
    if (std::binary_search(r.neighbors.begin(), r.neighbors.end(), r.node))
      throw parse_error(lineno, "node lists itself as a neighbor");
    all_ids.push_back(r.node);
    all_ids.insert(all_ids.end(), r.neighbors.begin(), r.neighbors.end());
    rows.push_back(std::move(r));
  }
  if (rows.size() != *n)
    throw data_error("header announces n=" + std::to_string(*n) + " but file holds " + std::to_string(rows.size()) + " records");

  std::sort(all_ids.begin(), all_ids.end());
  all_ids.erase(std::unique(all_ids.begin(), all_ids.end()), all_ids.end());
  std::unordered_map<external_id, node_t> local;
  local.reserve(all_ids.size());
  for (std::size_t i = 0; i < all_ids.size(); ++i) local.emplace(all_ids[i], static_cast<node_t>(i));

  SampleFile out;
  out.sample.meta = std::move(meta);
  std::vector<node_t> nb;
  for (const auto& r : rows) {
    nb.clear();
    for (external_id x : r.neighbors) nb.push_back(local.at(x));
    SampleRecord rec;
    rec.position = r.position;
    rec.node = local.at(r.node);
    rec.weight = r.weight;
    rec.walker = r.walker;
    out.sample.push_back(rec, nb);
  }
  out.ids = std::move(all_ids);
  return out;
}

}  // namespace gsize
