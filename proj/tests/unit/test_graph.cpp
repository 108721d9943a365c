#include <gsize/graph.hpp>
#include <gsize/generators.hpp>
#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

using namespace gsize;

namespace {

Graph parse(const std::string& text, LoadReport* rep = nullptr) {
  std::istringstream in(text);
  return load_edge_list(in, rep);
}

void expect_simple_symmetric(const Graph& g) {
  std::size_t degree_sum = 0;
  for (node_t v = 0; v < g.node_count(); ++v) {
    degree_sum += g.degree(v);
    const auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (node_t u : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
    EXPECT_EQ(g.index_of(g.external(v)), v);
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

}  // namespace

TEST(LoadEdgeList, TwoEdgePath) {
  const auto g = parse("1 2\n2 3");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(*g.index_of(1)), 1u);
  EXPECT_EQ(g.degree(*g.index_of(2)), 2u);
  EXPECT_EQ(g.degree(*g.index_of(3)), 1u);
}

TEST(LoadEdgeList, SelfLoopDropped) {
  LoadReport rep;
  const auto g = parse("1 1\n1 2", &rep);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(rep.self_loops, 1u);
}

TEST(LoadEdgeList, DuplicateCollapsedCommentSkipped) {
  LoadReport rep;
  const auto g = parse("1 2\n2 1\n# c", &rep);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(rep.duplicate_edges, 1u);
  EXPECT_EQ(rep.comment_lines, 1u);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  try {
    parse("1 2\n\n3 x\n");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("1 2 3\n"), parse_error);
  EXPECT_THROW(parse("-1 2\n"), parse_error);
}

TEST(LoadEdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(parse(""), data_error);
  EXPECT_THROW(parse("# only a comment\n"), data_error);
}

TEST(LoadEdgeList, Large64BitIds) {
  const auto g = parse("18446744073709551615 1\n");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_TRUE(g.index_of(18446744073709551615ull).has_value());
}

TEST(LoadEdgeList, ReloadIsIdempotent) {
  const auto g = gen::erdos_renyi(300, 0.02, 5);
  std::stringstream buf;
  write_edge_list(buf, g);
  const auto h = load_edge_list(buf);
  EXPECT_EQ(h.node_count(), g.node_count());
  EXPECT_EQ(h.edge_count(), g.edge_count());
  EXPECT_EQ(h.digest(), g.digest());
  const auto a = exact_stats(g), b = exact_stats(h);
  EXPECT_EQ(a.mean_degree, b.mean_degree);
  EXPECT_EQ(a.mean_square_degree, b.mean_square_degree);
  EXPECT_EQ(a.density, b.density);
}

TEST(LoadEdgeList, IndexingIndependentOfInputOrder) {
  const auto a = parse("5 9\n9 2\n2 5\n");
  const auto b = parse("2 9\n5 2\n9 5\n");
  EXPECT_EQ(a.digest(), b.digest());
}

TEST(Graph, Invariants) {
  for (const auto& g : {gen::complete(6), gen::star(4), gen::path(5), gen::erdos_renyi(500, 0.01, 2),
                        gen::barabasi_albert(400, 3, 1), gen::ring_of_cliques(5, 4), gen::star_of_cliques(4, 5),
                        gen::grid_2d(7, 5)})
    expect_simple_symmetric(g);
}

TEST(Graph, GeneratorShapes) {
  EXPECT_EQ(gen::complete(5).edge_count(), 10u);
  EXPECT_EQ(gen::star(4).edge_count(), 4u);
  EXPECT_EQ(gen::path(3).edge_count(), 2u);
  EXPECT_EQ(gen::grid_2d(30, 30).edge_count(), 2u * 30 * 29);
  EXPECT_EQ(gen::ring_of_cliques(4, 5).edge_count(), 4u * 10 + 4);
  EXPECT_TRUE(gen::ring_of_cliques(4, 5).connected());
  EXPECT_TRUE(gen::star_of_cliques(4, 5).connected());
  const auto ba = gen::barabasi_albert(500, 2, 3);
  EXPECT_EQ(ba.node_count(), 500u);
  EXPECT_TRUE(ba.connected());
}

TEST(Graph, ErdosRenyiEdgeCountWithinTolerance) {
  const std::size_t n = 2000;
  const double p = 0.01;
  const auto g = gen::erdos_renyi(n, p, 9);
  const double pairs = n * (n - 1) / 2.0, mean = pairs * p, sd = std::sqrt(pairs * p * (1 - p));
  EXPECT_LT(std::abs(static_cast<double>(g.edge_count()) - mean), 5 * sd);
}

TEST(Graph, GeneratorsAreSeedDeterministic) {
  EXPECT_EQ(gen::erdos_renyi(400, 0.03, 7).digest(), gen::erdos_renyi(400, 0.03, 7).digest());
  EXPECT_NE(gen::erdos_renyi(400, 0.03, 7).digest(), gen::erdos_renyi(400, 0.03, 8).digest());
  EXPECT_EQ(gen::barabasi_albert(300, 2, 4).digest(), gen::from_spec("ba:300:2", 4).digest());
}

TEST(Graph, FromSpecRejectsGarbage) {
  EXPECT_THROW(gen::from_spec("er:10", 1), config_error);
  EXPECT_THROW(gen::from_spec("nosuch:3", 1), config_error);
  EXPECT_THROW(gen::from_spec("er:10:x", 1), config_error);
}

TEST(LargestComponent, TriangleAndEdge) {
  const auto g = parse("1 2\n2 3\n3 1\n10 11\n");
  EXPECT_EQ(g.component_count(), 2u);
  const auto k = largest_connected_component(g);
  EXPECT_EQ(k.node_count(), 3u);
  EXPECT_EQ(k.edge_count(), 3u);
  EXPECT_TRUE(k.connected());
  EXPECT_TRUE(k.index_of(1) && k.index_of(2) && k.index_of(3));
  EXPECT_FALSE(k.index_of(10));
}

TEST(LargestComponent, ConnectedGraphUnchanged) {
  const auto g = gen::grid_2d(4, 4);
  EXPECT_EQ(largest_connected_component(g).digest(), g.digest());
}

TEST(LargestComponent, TieGoesToSmallestExternalId) {
  const auto g = parse("50 60\n7 8\n");
  const auto k = largest_connected_component(g);
  EXPECT_TRUE(k.index_of(7).has_value());
  EXPECT_FALSE(k.index_of(50).has_value());
}

TEST(ExactStats, Examples) {
  auto s = exact_stats(gen::complete(5));
  EXPECT_DOUBLE_EQ(s.mean_degree, 4.0);
  EXPECT_DOUBLE_EQ(s.density, 1.0);
  s = exact_stats(gen::star(4));
  EXPECT_DOUBLE_EQ(s.mean_degree, 1.6);
  EXPECT_DOUBLE_EQ(s.density, 0.4);
  s = exact_stats(gen::path(3));
  EXPECT_DOUBLE_EQ(s.mean_degree, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.density, 2.0 / 3.0);
  EXPECT_GE(s.mean_square_degree, s.mean_degree * s.mean_degree);
}

TEST(ExactStats, TooSmall) {
  const external_id one[] = {1};
  const auto g = Graph::from_edges({}, one);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_THROW(exact_stats(g), data_error);
}

TEST(SizeIdentity, Examples) {
  EXPECT_DOUBLE_EQ(size_identity(gen::complete(5)), 5.0);
  EXPECT_DOUBLE_EQ(size_identity(gen::star(4)), 5.0);
  EXPECT_DOUBLE_EQ(size_identity(gen::path(3)), 3.0);
}

TEST(SizeIdentity, NoEdges) {
  const external_id nodes[] = {1, 2, 3};
  EXPECT_THROW(size_identity(Graph::from_edges({}, nodes)), data_error);
}

TEST(SizeIdentity, HoldsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen::erdos_renyi(50 + seed * 17, 0.05, seed);
    if (g.edge_count() == 0) continue;
    const double n = static_cast<double>(g.node_count());
    EXPECT_LT(std::abs(size_identity(g) - n) / n, 1e-9);
  }
}

TEST(Graph, InducedKeepsIsolatedNodes) {
  const auto g = gen::path(4);  // 0-1-2-3
  const node_t keep[] = {0, 2};
  const auto h = g.induced(keep);
  EXPECT_EQ(h.node_count(), 2u);
  EXPECT_EQ(h.edge_count(), 0u);
}
