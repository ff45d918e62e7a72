#pragma once

#include <map>
#include <vector>

#include "gtm/graph.hpp"

namespace gtm {

// Per-vertex capacity vector: m(v) labels may point at vertex v. Vertices
// absent from the map read as 0. Values above deg(v) are legal; they are
// simply never binding because at most deg(v) incident edges exist.
class AlphaVector {
public:
  AlphaVector() = default;
  explicit AlphaVector(std::map<Vertex, int> capacities);
  AlphaVector(std::initializer_list<std::pair<const Vertex, int>> capacities);

  static AlphaVector full_degrees(const Multigraph& g);

  int at(Vertex v) const noexcept;
  void set(Vertex v, int capacity);
  const std::map<Vertex, int>& capacities() const noexcept { return caps_; }
  int total() const noexcept;

private:
  std::map<Vertex, int> caps_;
};

// The label an edge carries when it is left unassigned.
inline constexpr Vertex kUnlabeled = 0;

// One label per edge, parallel to Multigraph::edges(): an endpoint of the
// edge or kUnlabeled.
struct Labeling {
  std::vector<Vertex> labels;
};

// True iff every label is an endpoint of its edge (or kUnlabeled) and no
// vertex v carries more than alpha.at(v) labels. A label that is not an
// endpoint of its edge, including an identifier outside the graph, fails the
// endpoint condition and yields false. Throws DomainError when phi does not
// assign every edge or when alpha keys a vertex outside g.
bool is_valid_labeling(const Multigraph& g, const AlphaVector& alpha, const Labeling& phi);

// Number of labeled (non-kUnlabeled) edges.
int height(const Labeling& phi) noexcept;

struct MaxHeightResult {
  int height = 0;
  Labeling witness;
};

// Maximum height over all labelings of g with respect to alpha, with one
// labeling attaining it. Solved as an augmenting-path matching between edges
// and capacity-limited vertex slots; the witness is the first maximum found
// in deterministic edge order, and callers should rely only on its validity
// and height.
MaxHeightResult max_height(const Multigraph& g, const AlphaVector& alpha);

inline constexpr int kExhaustiveLabelingEdgeLimit = 6;

// Brute-force oracle for max_height: walks every endpoint assignment and
// keeps the best that respects the capacities. Exponential; refuses graphs
// with more than edge_limit edges.
int exhaustive_max_height(const Multigraph& g, const AlphaVector& alpha,
                          int edge_limit = kExhaustiveLabelingEdgeLimit);

} // namespace gtm
