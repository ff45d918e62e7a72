#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtm/errors.hpp"

namespace gtm {

// Vertex identifiers are positive integers, 1-based in the input format.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex w = 0;

  bool is_loop() const noexcept { return u == w; }
  bool has_endpoint(Vertex v) const noexcept { return u == v || w == v; }
};

// Undirected multigraph. Loops and parallel edges are allowed; a loop
// contributes 2 to the degree of its vertex. Vertices keep the identifiers
// they were declared with, so induced subgraphs preserve names. Edges are
// identified by their position in edges(). Immutable after construction.
class Multigraph {
public:
  Multigraph() = default;

  // `vertices` must be strictly increasing positive identifiers; every edge
  // endpoint must be declared.
  Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  // Vertices 1..n.
  static Multigraph with_vertex_count(int n, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int loop_count() const noexcept { return loop_count_; }
  int non_loop_edge_count() const noexcept { return edge_count() - loop_count_; }

  bool has_vertex(Vertex v) const noexcept;

  // Position of v within vertices(); throws DomainError for unknown v.
  int ordinal(Vertex v) const;

  // Incidence count, loops counted twice. Throws DomainError for unknown v.
  int degree(Vertex v) const;

  // Number of edges having v as an endpoint; a loop counts once here.
  int incident_edge_count(Vertex v) const;

  // Equals 2 * edge_count().
  int degree_sum() const noexcept;

  // Subgraph on `keep` containing exactly the edges with both endpoints in
  // keep; vertex identifiers are preserved. keep must be a subset of the
  // vertex set (duplicates are ignored).
  Multigraph induced_subgraph(std::span<const Vertex> keep) const;

  // Indices of the edges with at least one endpoint in w, ascending. The
  // complement of the induced-subgraph edge set within edges().
  std::vector<int> edges_meeting(std::span<const Vertex> w) const;

  // Indices of the edges with both endpoints in keep, ascending.
  std::vector<int> edges_within(std::span<const Vertex> keep) const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;   // parallel to vertices_
  std::vector<int> incident_; // parallel to vertices_
  std::vector<int> slot_;     // vertex id -> ordinal, -1 if absent
  int loop_count_ = 0;
};

// Parses the edge-list format: first non-comment line "n m", then exactly m
// lines "u w" with 1 <= u,w <= n; u = w encodes a loop. Lines starting with
// '#' and blank lines are ignored. Errors carry the offending line number.
Multigraph parse_graph(std::string_view text);

// Reads a file and parses it; ParseError when the file cannot be read.
Multigraph load_graph(const std::string& path);

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
};

// One direction per edge, parallel to Multigraph::edges(). A loop has the
// single orientation (v, v).
struct Orientation {
  std::vector<Arc> arcs;
};

// Out-degree of every vertex in vertex order: the number of arcs with that
// tail. A loop adds 1 to the out-degree (and 1 to the in-degree) of its
// vertex. Validates that o matches g edge by edge.
std::vector<int> out_degrees(const Multigraph& g, const Orientation& o);

inline constexpr std::size_t kDefaultEnumerationLimit = 24;

// Number of distinct orientations: 2^(#non-loop edges).
std::uint64_t orientation_count(const Multigraph& g);

// Streams every orientation of g exactly once; loops are emitted in their
// single canonical direction. Refuses graphs above the edge limit.
class OrientationStream {
public:
  explicit OrientationStream(const Multigraph& g,
                             std::size_t edge_limit = kDefaultEnumerationLimit);

  std::optional<Orientation> next();
  std::uint64_t total() const noexcept { return total_; }

private:
  const Multigraph* g_;
  std::vector<int> flips_; // non-loop edge indices, one mask bit each
  std::uint64_t mask_ = 0;
  std::uint64_t total_ = 0;
};

// Materializes the whole stream; intended for small graphs.
std::vector<Orientation> all_orientations(const Multigraph& g,
                                          std::size_t edge_limit = kDefaultEnumerationLimit);

} // namespace gtm
