#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtm/labeling.hpp"

namespace gtm {

// Ground element (v, i): the i-th degree slot of vertex v, 1 <= i <= deg(v).
struct GroundElement {
  Vertex vertex = 0;
  int index = 0;

  auto operator<=>(const GroundElement&) const = default;
};

// Serializes as "v:i".
std::string to_token(const GroundElement& e);
GroundElement parse_ground_token(std::string_view token);

// Always kept lexicographically ordered by (vertex, index).
using GroundSet = std::vector<GroundElement>;

std::string to_string(const GroundSet& x); // "{1:1,2:3}"

// All degree slots of g: |S| = sum of degrees = 2|E|.
GroundSet ground_set(const Multigraph& g);

// S(W): every slot of every vertex in w. w must be a subset of the vertices.
GroundSet perfect_subset(const Multigraph& g, std::span<const Vertex> w);

// Per-vertex slot counts of x. Validates that x lies inside the ground set
// of g; duplicates in x are ignored.
AlphaVector alpha_of(const Multigraph& g, std::span<const GroundElement> x);

// Ordered family of ground subsets, one per edge of a designated collection.
struct Presentation {
  std::vector<int> edge_indices;  // into Multigraph::edges()
  std::vector<GroundSet> sets;    // aligned with edge_indices
};

// The transversal matroid of g on the degree-slot ground set, with the slots
// of the vertices in w deleted: TM(G, W). W empty gives TM(G) itself, which
// has rank |E| and is identically self-dual. Rank queries reduce to maximum
// labeling height for the slot-count capacity vector of the queried subset.
// Immutable; queries are pure and safe to run concurrently.
class TransversalMatroid {
public:
  explicit TransversalMatroid(Multigraph g, std::vector<Vertex> w = {});

  const Multigraph& graph() const noexcept { return g_; }
  const std::vector<Vertex>& deleted_vertices() const noexcept { return w_; }
  const GroundSet& ground() const noexcept { return ground_; }

  // Rank of the whole ground set.
  int rank() const noexcept { return rank_; }

  // Rank of a subset of the ground set. Elements must lie inside ground();
  // duplicates are ignored. Throws DomainError otherwise.
  int rank(std::span<const GroundElement> x) const;

  bool is_independent(std::span<const GroundElement> x) const;
  bool is_basis(std::span<const GroundElement> b) const;

  // TM(G, W ∪ w): deletion is domain restriction of the rank oracle.
  TransversalMatroid delete_vertices(std::span<const Vertex> w) const;

  // The defining family (A(e), e in E): A(e) holds every slot of either
  // endpoint of e. Requires W empty.
  Presentation primal_presentation() const;

  // The family (A(e), e in E1) over the edges of G[V\W], slot ranges still
  // taken from the full-graph degrees. Presents the dual of TM(G, W); with
  // W empty it coincides with the primal family.
  Presentation dual_presentation() const;

  // ground() minus x. x must lie inside ground().
  GroundSet complement(std::span<const GroundElement> x) const;

private:
  GroundSet normalize(std::span<const GroundElement> x) const; // sort, dedupe, validate

  Multigraph g_;
  std::vector<Vertex> w_;
  GroundSet ground_;
  int rank_ = 0;
};

struct SelfDualOptions {
  // Exhaustive basis sweep is refused above this ground size...
  std::size_t exhaustive_ground_limit = 16;
  // ...unless sampling is allowed: then greedily complete random element
  // orders to bases and check their complements.
  bool sample_when_large = false;
  int sample_count = 200;
  std::uint64_t seed = 0x5eed;
};

// True iff the complement of every basis inspected is again a basis.
// Exhaustive over all rank-size subsets within the ground limit. Requires a
// handle with W empty.
bool check_self_dual(const TransversalMatroid& m, const SelfDualOptions& options = {});

} // namespace gtm
