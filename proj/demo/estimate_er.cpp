// Estimates the size of a random graph from one uniform sample and one random
// walk, and prints the estimates next to the true node count.

#include <gsize/gsize.hpp>

#include <cstdio>

int main() {
  using namespace gsize;
  const Graph g = largest_connected_component(gen::erdos_renyi(5000, 0.004, 42));
  std::printf("true N = %zu\n", g.node_count());

  auto show = [](const char* name, const EstimateOutcome& e) {
    if (e)
      std::printf("%-28s %10.1f\n", name, e.value());
    else
      std::printf("%-28s %10s\n", name, "inf");
  };

  const Sample uis = sample_uis(g, 400, 1);
  show("node-uis (n=400)", node_uis(uis));
  show("ind-a (n=400)", inda_uis(uis));
  show("ind-b (n=400)", indb_auto(uis));
  show("mle-exact (n=400)", mle_unique_exact(uis.size(), count_unique(uis)));

  const Sample walk = sample_rw(g, 2000, 2);
  show("node-wis, raw walk", node_wis(walk));
  show("node-wis, thinning 10", estimate_thinned(walk, {10}, ThinnedBase::node_wis, false));
  show("ind-b margin 0", ind_margin(walk, {0}));
  show("ind-b margin 50", ind_margin(walk, {50}));
}
