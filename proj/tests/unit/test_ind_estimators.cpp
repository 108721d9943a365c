#include <gtest/gtest.h>
#include <oracle/brute_force.hpp>

#include <algorithm>

using namespace gsize;
using oracle::make_sample;

namespace {

double median(std::vector<double> v) { return percentile(std::move(v), 0.5); }
double band(const std::vector<double>& v) { return percentile(v, 0.9) - percentile(v, 0.1); }

std::vector<double> rescaled(const Sample& s, double c) {
  std::vector<double> w;
  for (const auto& r : s.records()) w.push_back(c * r.weight);
  return w;
}

std::vector<external_id> ids_of(const Graph& g, const Sample& s) {
  std::vector<external_id> ids;
  for (const auto& r : s.records()) ids.push_back(g.external(r.node));
  return ids;
}

}  // namespace

TEST(MeanDegree, Uis) {
  const auto g = gen::star(6);  // hub degree 6, leaves 1
  const auto s = make_sample(g, {0, 1, 2});
  EXPECT_DOUBLE_EQ(mean_degree_uis(s), 8.0 / 3.0);
  const auto k8 = gen::complete(8);
  EXPECT_DOUBLE_EQ(mean_degree_uis(make_sample(k8, {3})), 7.0);
  const auto p = gen::path(6);
  EXPECT_DOUBLE_EQ(mean_degree_uis(make_sample(p, {0, 1, 2, 3, 4, 5})), exact_stats(p).mean_degree);
  EXPECT_THROW(mean_degree_uis(Sample{}), config_error);
}

TEST(MeanDegree, DegreesTwoFourSix) {
  // node 0 has degree 2, node 1 degree 4, node 2 degree 6
  std::vector<std::pair<external_id, external_id>> e{{0, 10}, {0, 11}};
  for (external_id v = 20; v < 24; ++v) e.emplace_back(1, v);
  for (external_id v = 30; v < 36; ++v) e.emplace_back(2, v);
  const auto g = Graph::from_edges(e);
  EXPECT_DOUBLE_EQ(mean_degree_uis(make_sample(g, {0, 1, 2})), 4.0);
}

TEST(MeanDegree, Wis) {
  const auto g = gen::star(3);
  const auto s = make_sample(g, {1, 0}, SamplingMethod::wis, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(mean_degree_wis(s), 1.5);
  auto u = make_sample(g, {1, 0, 2}, SamplingMethod::wis);
  EXPECT_DOUBLE_EQ(mean_degree_wis(u), mean_degree_uis(u));
  // Each node once with w = deg: sum(1) / sum(1/deg) = N / sum(1/deg).
  const auto all = make_sample(g, {0, 1, 2, 3}, SamplingMethod::wis, {3, 1, 1, 1});
  EXPECT_DOUBLE_EQ(mean_degree_wis(all), 4.0 / (1.0 / 3 + 3.0));
  EXPECT_THROW(mean_degree_wis(make_sample(g, {1}, SamplingMethod::wis, {0.0})), data_error);
}

TEST(Density, Uis) {
  EXPECT_DOUBLE_EQ(density_uis(make_sample(gen::complete(3), {0, 1, 2})), 1.0);
  EXPECT_DOUBLE_EQ(density_uis(make_sample(gen::path(3), {0, 1, 2})), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(density_uis(make_sample(gen::path(3), {0, 2})), 0.0);
  EXPECT_THROW(density_uis(make_sample(gen::path(3), {0})), config_error);
}

TEST(Density, Wis) {
  const auto tri = gen::complete(3);
  EXPECT_DOUBLE_EQ(density_wis(make_sample(tri, {0, 1, 2}, SamplingMethod::wis, {2, 2, 2})), 1.0);
  const auto g = gen::erdos_renyi(60, 0.1, 1);
  const auto u = sample_uis(g, 40, 3);
  auto w = u;
  w.meta.method = SamplingMethod::wis;
  EXPECT_DOUBLE_EQ(density_wis(w), density_uis(u));
}

TEST(IndA, UisExamples) {
  EXPECT_DOUBLE_EQ(inda_uis(make_sample(gen::complete(3), {0, 1, 2})).value(), 3.0);
  EXPECT_DOUBLE_EQ(inda_uis(make_sample(gen::path(3), {0, 1, 2})).value(), 3.0);
  EXPECT_FALSE(inda_uis(make_sample(gen::path(3), {0, 2})).is_finite());
}

TEST(IndA, ExactRecoveryOnFullEnumeration) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen::erdos_renyi(30 + seed, 0.15, seed);
    if (g.edge_count() == 0) continue;
    std::vector<external_id> all(g.external_ids().begin(), g.external_ids().end());
    EXPECT_DOUBLE_EQ(inda_uis(make_sample(g, all)).value(), static_cast<double>(g.node_count()));
  }
}

TEST(IndA, WisExamples) {
  EXPECT_DOUBLE_EQ(inda_wis(make_sample(gen::complete(3), {0, 1, 2}, SamplingMethod::wis, {2, 2, 2})).value(), 3.0);
  const auto g = gen::erdos_renyi(80, 0.08, 2);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto u = sample_uis(g, 50, seed);
    auto w = u;
    w.meta.method = SamplingMethod::wis;
    const auto a = inda_uis(u), b = inda_wis(w);
    ASSERT_EQ(a.is_finite(), b.is_finite());
    if (a) EXPECT_TRUE(oracle::close(a.value(), b.value(), 1e-12));
  }
}

TEST(IndA, MatchesOracle) {
  const auto g = gen::erdos_renyi(50, 0.15, 3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto s = oracle::random_weighted_sample(g, 10 + seed * 6, seed, SamplingMethod::wis);
    EXPECT_TRUE(oracle::same(inda_wis(s), oracle::inda_wis(s)));
    auto u = s;
    u.meta.method = SamplingMethod::uis;
    EXPECT_TRUE(oracle::same(inda_uis(u), oracle::inda_uis(u)));
    EXPECT_TRUE(oracle::close(density_wis(s), [&] {
      double e = 0, p = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          const double x = 1 / (s[i].weight * s[j].weight);
          p += x;
          e += g.has_edge(s[i].node, s[j].node) * x;
        }
      return e / p;
    }()));
  }
}

TEST(IndA, WisSimulation) {
  const auto g = gen::erdos_renyi(500, 0.05, 7);  // <k> about 25
  std::vector<double> est;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto e = inda_wis(sample_wis(g, WeightRule::degree(), 400, 10 + t));
    if (e) est.push_back(e.value() / 500.0);
  }
  EXPECT_NEAR(median(est), 1.0, 0.15);
}

TEST(IndB, UisExamples) {
  // |A| = 50, |S| = 20, n^xcol = 10
  const auto g = gen::complete(3);
  Sample s;
  for (int i = 0; i < 20; ++i) {
    SampleRecord r;
    r.node = i < 10 ? 0 : 1;
    s.push_back(r, {});
  }
  AuxiliarySet a;
  a.counts = {{0, 1}};
  a.cardinality = 50;
  EXPECT_DOUBLE_EQ(indb_uis(s, a).value(), 100.0);
  EXPECT_DOUBLE_EQ(indb_uis(make_sample(g, {2}), AuxiliarySet{AuxMode::set, {{2, 1}}, 1}).value(), 1.0);
  EXPECT_FALSE(indb_uis(make_sample(g, {1}), AuxiliarySet{AuxMode::set, {{2, 1}}, 1}).is_finite());
}

TEST(IndB, WisExamples) {
  const auto tri = gen::complete(3);
  const AuxiliarySet all{AuxMode::set, {{0, 1}, {1, 1}, {2, 1}}, 3};
  EXPECT_DOUBLE_EQ(indb_wis(make_sample(tri, {0, 1}, SamplingMethod::wis, {2, 2}), all).value(), 3.0);
  const auto g = gen::erdos_renyi(80, 0.08, 2);
  const auto u = sample_uis(g, 50, 4);
  auto w = u;
  w.meta.method = SamplingMethod::wis;
  for (auto mode : {AuxMode::set, AuxMode::multiset}) {
    const auto a = build_auxiliary(u, mode);
    EXPECT_EQ(indb_uis(u, a), indb_wis(w, a));
  }
}

TEST(IndB, AutoOnStar) {
  const auto g = gen::star(4);
  EXPECT_DOUBLE_EQ(indb_auto(make_sample(g, {0, 1})).value(), 5.0);
}

TEST(IndB, ModesAgreeWithoutRepeatedNeighbors) {
  const auto g = gen::ring_of_cliques(6, 4);
  // Two nodes from different cliques far apart share no neighbors.
  const auto s = make_sample(g, {0, 12});
  EXPECT_EQ(indb_auto(s, AuxMode::set), indb_auto(s, AuxMode::multiset));
}

TEST(IndB, MatchesOracle) {
  const auto g = gen::erdos_renyi(50, 0.15, 5);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (auto method : {SamplingMethod::uis, SamplingMethod::wis}) {
      const auto s = oracle::random_weighted_sample(g, 10 + seed * 6, seed, method);
      EXPECT_TRUE(oracle::same(indb_auto(s, AuxMode::set), oracle::indb(s, true)));
      EXPECT_TRUE(oracle::same(indb_auto(s, AuxMode::multiset), oracle::indb(s, false)));
    }
  }
}

TEST(IndB, ScaleInvariance) {
  const auto g = gen::erdos_renyi(70, 0.1, 6);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = oracle::random_weighted_sample(g, 60, seed, SamplingMethod::wis);
    const auto ids = ids_of(g, s);
    for (double c : {0.1, 10.0}) {
      const auto t = make_sample(g, ids, SamplingMethod::wis, rescaled(s, c));
      for (auto mode : {AuxMode::set, AuxMode::multiset}) {
        const auto a = indb_auto(s, mode), b = indb_auto(t, mode);
        ASSERT_EQ(a.is_finite(), b.is_finite());
        if (a) EXPECT_TRUE(oracle::close(a.value(), b.value(), 1e-12));
      }
      const auto a = inda_wis(s), b = inda_wis(t);
      ASSERT_EQ(a.is_finite(), b.is_finite());
      if (a) EXPECT_TRUE(oracle::close(a.value(), b.value(), 1e-12));
    }
  }
}

TEST(IndB, UisSamplesIgnoreRecordWeights) {
  const auto g = gen::erdos_renyi(60, 0.1, 8);
  const auto s = oracle::random_weighted_sample(g, 40, 3, SamplingMethod::uis);
  auto unit = make_sample(g, ids_of(g, s));
  EXPECT_EQ(indb_auto(s), indb_auto(unit));
  EXPECT_EQ(inda_uis(s), inda_uis(unit));
}

TEST(IndB, WisSimulationDenseGraph) {
  const auto g = gen::erdos_renyi(2000, 0.05, 9);  // <k> about 100
  std::vector<double> est;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto e = indb_auto(sample_wis(g, WeightRule::degree(), 200, 500 + t));
    if (e) est.push_back(e.value() / 2000.0);
  }
  EXPECT_NEAR(median(est), 1.0, 0.1);
}

TEST(IndB, SetModeNoMoreDispersedOnSkewedGraph) {
  const auto g = gen::star_of_cliques(20, 10);
  const double n_true = static_cast<double>(g.node_count());
  std::vector<double> set_err, multi_err;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto s = sample_uis(g, 60, 900 + t);
    const auto a = indb_auto(s, AuxMode::set), b = indb_auto(s, AuxMode::multiset);
    if (a) set_err.push_back(a.value() / n_true);
    if (b) multi_err.push_back(b.value() / n_true);
  }
  EXPECT_LE(band(set_err), band(multi_err));
}

TEST(IndB, BeatsIndAInDispersion) {
  const auto g = gen::erdos_renyi(2000, 0.05, 11);
  std::vector<double> a, b;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto s = sample_wis(g, WeightRule::degree(), 200, 3000 + t);
    if (const auto e = inda_wis(s)) a.push_back(e.value());
    if (const auto e = indb_auto(s)) b.push_back(e.value());
  }
  EXPECT_LE(band(b), band(a));
}

TEST(IndB, BeatsNodeUisOnDenseGraph) {
  const auto g = gen::erdos_renyi(2000, 0.05, 12);
  std::vector<double> ind, node;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto s = sample_uis(g, 200, 4000 + t);
    if (const auto e = indb_auto(s)) ind.push_back(e.value());
    if (const auto e = node_uis(s)) node.push_back(e.value());
  }
  EXPECT_LT(band(ind), band(node));
}
