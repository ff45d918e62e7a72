#include <random>

#include "doctest.h"
#include "gtm/labeling.hpp"

using namespace gtm;

namespace {

Multigraph k2() { return Multigraph::with_vertex_count(2, {{1, 2}}); }

Multigraph random_small_graph(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 4);
  const int m = static_cast<int>(rng() % 7); // within the exhaustive oracle's reach
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back({1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)),
                     1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n))});
  }
  return Multigraph::with_vertex_count(n, std::move(edges));
}

AlphaVector random_alpha(std::mt19937_64& rng, const Multigraph& g, int slack = 0) {
  std::map<Vertex, int> caps;
  for (Vertex v : g.vertices()) {
    caps[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(g.degree(v) + 1 + slack));
  }
  return AlphaVector(std::move(caps));
}

} // namespace

TEST_CASE("alpha vector basics") {
  AlphaVector alpha{{1, 2}, {3, 1}};
  CHECK(alpha.at(1) == 2);
  CHECK(alpha.at(2) == 0); // absent vertices read as zero
  CHECK(alpha.total() == 3);
  alpha.set(2, 5);
  CHECK(alpha.total() == 8);
  CHECK_THROWS_AS(AlphaVector({{1, -1}}), DomainError);

  const AlphaVector full = AlphaVector::full_degrees(k2());
  CHECK(full.at(1) == 1);
  CHECK(full.at(2) == 1);
}

TEST_CASE("labeling validity follows the endpoint and capacity rules") {
  const Multigraph g = k2();
  const AlphaVector alpha{{1, 1}, {2, 1}};
  CHECK(is_valid_labeling(g, alpha, Labeling{{1}}));
  CHECK(is_valid_labeling(g, alpha, Labeling{{kUnlabeled}}));
  // a label that is not an endpoint of its edge, here a vertex the graph
  // does not even have, fails validity rather than throwing
  CHECK_FALSE(is_valid_labeling(g, alpha, Labeling{{3}}));
  CHECK_FALSE(is_valid_labeling(g, AlphaVector{}, Labeling{{1}})); // zero capacity
  CHECK_THROWS_AS(is_valid_labeling(g, alpha, Labeling{{}}), DomainError);
  CHECK_THROWS_AS(is_valid_labeling(g, AlphaVector{{9, 1}}, Labeling{{1}}), DomainError);
}

TEST_CASE("capacity is enforced per vertex") {
  const Multigraph g = Multigraph::with_vertex_count(3, {{1, 2}, {1, 3}});
  CHECK(is_valid_labeling(g, AlphaVector{{1, 2}}, Labeling{{1, 1}}));
  CHECK_FALSE(is_valid_labeling(g, AlphaVector{{1, 1}}, Labeling{{1, 1}}));
  CHECK(is_valid_labeling(g, AlphaVector{{1, 1}, {3, 1}}, Labeling{{1, 3}}));
}

TEST_CASE("height counts labeled edges") {
  CHECK(height(Labeling{{}}) == 0);
  CHECK(height(Labeling{{1, kUnlabeled, 2}}) == 2);
}

TEST_CASE("max height on hand-checked instances") {
  const Multigraph loop = Multigraph::with_vertex_count(1, {{1, 1}});
  CHECK(max_height(loop, AlphaVector{{1, 1}}).height == 1);
  CHECK(max_height(loop, AlphaVector{}).height == 0);

  const Multigraph g = k2();
  CHECK(max_height(g, AlphaVector{{1, 1}, {2, 1}}).height == 1);

  const Multigraph k3 = Multigraph::with_vertex_count(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(max_height(k3, AlphaVector::full_degrees(k3)).height == 3);
  CHECK(max_height(k3, AlphaVector{{1, 2}, {2, 2}, {3, 2}}).height == 3);
  CHECK(max_height(k3, AlphaVector{{1, 1}, {2, 1}}).height == 2);
}

TEST_CASE("full-degree capacities label every edge") {
  std::mt19937_64 rng(8801);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = random_small_graph(rng);
    CHECK(max_height(g, AlphaVector::full_degrees(g)).height == g.edge_count());
  }
}

TEST_CASE("matching height agrees with the exhaustive oracle") {
  std::mt19937_64 rng(8802);
  for (int trial = 0; trial < 150; ++trial) {
    const Multigraph g = random_small_graph(rng);
    if (g.edge_count() > kExhaustiveLabelingEdgeLimit) continue;
    const AlphaVector alpha = random_alpha(rng, g, trial % 2); // sometimes slack above degree
    const MaxHeightResult result = max_height(g, alpha);
    CHECK(result.height == exhaustive_max_height(g, alpha));
    CHECK(is_valid_labeling(g, alpha, result.witness));
    CHECK(height(result.witness) == result.height);
  }
}

TEST_CASE("max height is monotone in the capacity vector") {
  std::mt19937_64 rng(8803);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = random_small_graph(rng);
    const AlphaVector alpha = random_alpha(rng, g);
    AlphaVector bigger = alpha;
    for (Vertex v : g.vertices()) {
      if (rng() % 2 == 0) bigger.set(v, bigger.at(v) + 1);
    }
    CHECK(max_height(g, bigger).height >= max_height(g, alpha).height);
  }
}

TEST_CASE("exhaustive oracle refuses oversized graphs") {
  const Multigraph g =
      Multigraph::with_vertex_count(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}});
  CHECK_THROWS_AS(exhaustive_max_height(g, AlphaVector::full_degrees(g)), LimitError);
  CHECK(exhaustive_max_height(g, AlphaVector::full_degrees(g), 7) == 7);
}
