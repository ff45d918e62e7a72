#include <algorithm>
#include <random>

#include "doctest.h"
#include "gtm/matroid.hpp"
#include "gtm/oracle.hpp"

using namespace gtm;

namespace {

Multigraph k2() { return Multigraph::with_vertex_count(2, {{1, 2}}); }
Multigraph k3() { return Multigraph::with_vertex_count(3, {{1, 2}, {1, 3}, {2, 3}}); }
Multigraph k4() {
  return Multigraph::with_vertex_count(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}
Multigraph k6() {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= 6; ++u) {
    for (Vertex w = u + 1; w <= 6; ++w) edges.push_back({u, w});
  }
  return Multigraph::with_vertex_count(6, std::move(edges));
}

} // namespace

TEST_CASE("ground tokens round-trip") {
  const GroundElement e{3, 2};
  CHECK(to_token(e) == "3:2");
  CHECK(parse_ground_token("3:2") == e);
  CHECK_THROWS_AS(parse_ground_token("3"), ParseError);
  CHECK_THROWS_AS(parse_ground_token("3:2:1"), ParseError);
  CHECK_THROWS_AS(parse_ground_token("a:1"), ParseError);
  CHECK_THROWS_AS(parse_ground_token("0:1"), ParseError);
  CHECK_THROWS_AS(parse_ground_token("1:0"), ParseError);
  CHECK(to_string(GroundSet{{1, 1}, {2, 3}}) == "{1:1,2:3}");
}

TEST_CASE("ground set matches degree slots") {
  const Multigraph g = Multigraph::with_vertex_count(2, {{1, 1}, {1, 2}});
  const GroundSet s = ground_set(g);
  CHECK(s == GroundSet{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  CHECK(static_cast<int>(s.size()) == g.degree_sum());

  const GroundSet sw = perfect_subset(g, std::vector<Vertex>{2});
  CHECK(sw == GroundSet{{2, 1}});
  CHECK(perfect_subset(g, std::vector<Vertex>{}).empty());
  CHECK_THROWS_AS(perfect_subset(g, std::vector<Vertex>{5}), DomainError);
}

TEST_CASE("alpha_of counts slots per vertex and validates bounds") {
  const Multigraph g = k3();
  const AlphaVector alpha = alpha_of(g, GroundSet{{1, 1}, {1, 2}, {3, 1}});
  CHECK(alpha.at(1) == 2);
  CHECK(alpha.at(2) == 0);
  CHECK(alpha.at(3) == 1);
  CHECK_THROWS_AS(alpha_of(g, GroundSet{{1, 3}}), DomainError); // deg(1) = 2
  CHECK_THROWS_AS(alpha_of(g, GroundSet{{7, 1}}), DomainError);
}

TEST_CASE("whole-matroid rank equals edge count") {
  CHECK(TransversalMatroid(k2()).rank() == 1);
  CHECK(TransversalMatroid(k3()).rank() == 3);
  CHECK(TransversalMatroid(k4()).rank() == 6);
  CHECK(TransversalMatroid(k6()).rank() == 15);
  const Multigraph loop = Multigraph::with_vertex_count(1, {{1, 1}});
  CHECK(TransversalMatroid(loop).rank() == 1);
}

TEST_CASE("rank, independence, and bases on hand-checked subsets") {
  const TransversalMatroid m(k3());
  CHECK(m.ground().size() == 6);
  CHECK(m.rank(GroundSet{}) == 0);
  CHECK(m.is_independent(GroundSet{}));
  CHECK(m.rank(GroundSet{{1, 1}}) == 1);
  CHECK(m.rank(GroundSet{{1, 1}, {1, 2}}) == 2);
  // all six slots only cover three edges
  CHECK(m.rank(m.ground()) == 3);
  CHECK(m.is_basis(GroundSet{{1, 1}, {1, 2}, {2, 1}}));
  CHECK_FALSE(m.is_basis(GroundSet{{1, 1}, {1, 2}}));
  CHECK(m.rank(GroundSet{{1, 1}, {1, 1}, {1, 2}}) == 2); // duplicates collapse
  CHECK_THROWS_AS(m.rank(GroundSet{{1, 3}}), DomainError);
}

TEST_CASE("deletion removes the perfect subset and restricts rank") {
  const TransversalMatroid m(k3(), {3});
  CHECK(m.ground() == GroundSet{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(m.rank() == 3); // all three edges still match into remaining slots
  CHECK_THROWS_AS(m.rank(GroundSet{{3, 1}}), DomainError);

  const TransversalMatroid chained = TransversalMatroid(k3()).delete_vertices(std::vector<Vertex>{3});
  CHECK(chained.ground() == m.ground());
  CHECK(chained.deleted_vertices() == std::vector<Vertex>{3});

  const TransversalMatroid more = chained.delete_vertices(std::vector<Vertex>{1});
  CHECK(more.deleted_vertices() == std::vector<Vertex>{1, 3});
  CHECK(more.ground() == GroundSet{{2, 1}, {2, 2}});
  CHECK(more.rank() == 2);

  CHECK_THROWS_AS(TransversalMatroid(k3(), {9}), DomainError);
}

TEST_CASE("rank of a deletion never uses deleted slots but keeps all edges") {
  // K2 with v2 deleted: the single edge can still be matched at v1.
  const TransversalMatroid m(k2(), {2});
  CHECK(m.ground() == GroundSet{{1, 1}});
  CHECK(m.rank() == 1);
  CHECK(m.is_basis(GroundSet{{1, 1}}));
}

TEST_CASE("primal presentation lists endpoint slots per edge") {
  const TransversalMatroid m(k2());
  const Presentation p = m.primal_presentation();
  REQUIRE(p.sets.size() == 1);
  CHECK(p.edge_indices == std::vector<int>{0});
  CHECK(p.sets[0] == GroundSet{{1, 1}, {2, 1}});
  CHECK_THROWS_AS(TransversalMatroid(k2(), {2}).primal_presentation(), DomainError);
}

TEST_CASE("dual presentation keeps full-graph degree ranges") {
  const TransversalMatroid m(k6(), {5, 6});
  const Presentation p = m.dual_presentation();
  // edges of the graph restricted to vertices 1..4
  REQUIRE(p.sets.size() == 6);
  for (const GroundSet& set : p.sets) {
    CHECK(set.size() == 10); // two endpoints, five slots each (degrees of the full graph)
  }
  for (int idx : p.edge_indices) {
    const Edge& e = m.graph().edges()[static_cast<std::size_t>(idx)];
    CHECK(e.u <= 4);
    CHECK(e.w <= 4);
  }
  // without deletion it coincides with the primal family
  const TransversalMatroid whole(k3());
  CHECK(whole.dual_presentation().sets == whole.primal_presentation().sets);
}

TEST_CASE("complement stays inside the ground set") {
  const TransversalMatroid m(k2());
  CHECK(m.complement(GroundSet{{1, 1}}) == GroundSet{{2, 1}});
  CHECK(m.complement(GroundSet{}) == m.ground());
  CHECK_THROWS_AS(m.complement(GroundSet{{9, 9}}), DomainError);
}

TEST_CASE("complements of bases are bases") {
  for (const Multigraph& g :
       {k2(), k3(), k4(), Multigraph::with_vertex_count(1, {{1, 1}}),
        Multigraph::with_vertex_count(2, {{1, 2}, {1, 2}}),
        Multigraph::with_vertex_count(3, {{1, 2}, {2, 3}, {1, 1}})}) {
    const TransversalMatroid m(g);
    CAPTURE(g.edge_count());
    CHECK(check_self_dual(m));
  }
}

TEST_CASE("self-duality checker rejects oversized grounds unless sampling") {
  const TransversalMatroid m(k6()); // ground size 30
  CHECK_THROWS_AS(check_self_dual(m), LimitError);
  SelfDualOptions options;
  options.sample_when_large = true;
  options.sample_count = 40;
  CHECK(check_self_dual(m, options));
  CHECK_THROWS_AS(check_self_dual(TransversalMatroid(k3(), {1})), DomainError);
}

TEST_CASE("independence agrees with partial-transversal testing on the primal family") {
  std::mt19937_64 rng(9901);
  for (const Multigraph& g :
       {k3(), Multigraph::with_vertex_count(2, {{1, 2}, {1, 2}}),
        Multigraph::with_vertex_count(3, {{1, 2}, {2, 3}, {1, 1}}),
        Multigraph::with_vertex_count(4, {{1, 2}, {2, 3}, {3, 4}})}) {
    const TransversalMatroid m(g);
    const oracle::SetSystem sys = oracle::make_system(m.primal_presentation(), m.ground());
    const std::size_t n = m.ground().size();
    REQUIRE(n <= 12);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      GroundSet x;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) x.push_back(m.ground()[i]);
      }
      CHECK(m.is_independent(x) == oracle::is_partial_transversal(sys, x));
    }
  }
}
