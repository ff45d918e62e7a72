#include "gtm/labeling.hpp"

#include <algorithm>
#include <numeric>

namespace gtm {

AlphaVector::AlphaVector(std::map<Vertex, int> capacities) : caps_(std::move(capacities)) {
  for (const auto& [v, m] : caps_)
    if (m < 0)
      throw DomainError("capacity of vertex " + std::to_string(v) + " is negative");
}

AlphaVector::AlphaVector(std::initializer_list<std::pair<const Vertex, int>> capacities)
    : AlphaVector(std::map<Vertex, int>(capacities)) {}

AlphaVector AlphaVector::full_degrees(const Multigraph& g) {
  std::map<Vertex, int> caps;
  for (Vertex v : g.vertices())
    caps[v] = g.degree(v);
  return AlphaVector(std::move(caps));
}

int AlphaVector::at(Vertex v) const noexcept {
  auto it = caps_.find(v);
  return it == caps_.end() ? 0 : it->second;
}

void AlphaVector::set(Vertex v, int capacity) {
  if (capacity < 0)
    throw DomainError("capacity of vertex " + std::to_string(v) + " is negative");
  caps_[v] = capacity;
}

int AlphaVector::total() const noexcept {
  int sum = 0;
  for (const auto& [v, m] : caps_)
    sum += m;
  return sum;
}

namespace {

void require_alpha_keys_in(const Multigraph& g, const AlphaVector& alpha) {
  for (const auto& [v, m] : alpha.capacities())
    if (!g.has_vertex(v))
      throw DomainError("capacity vector keys unknown vertex " + std::to_string(v));
}

} // namespace

bool is_valid_labeling(const Multigraph& g, const AlphaVector& alpha, const Labeling& phi) {
  require_alpha_keys_in(g, alpha);
  if (phi.labels.size() != g.edges().size())
    throw DomainError("labeling must assign every edge exactly once");

  std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < phi.labels.size(); ++i) {
    Vertex l = phi.labels[i];
    if (l == kUnlabeled)
      continue;
    if (!g.edges()[i].has_endpoint(l))
      return false; // endpoint condition, also covers identifiers outside g
    used[static_cast<std::size_t>(g.ordinal(l))] += 1;
  }
  for (Vertex v : g.vertices())
    if (used[static_cast<std::size_t>(g.ordinal(v))] > alpha.at(v))
      return false;
  return true;
}

int height(const Labeling& phi) noexcept {
  return static_cast<int>(std::count_if(phi.labels.begin(), phi.labels.end(),
                                        [](Vertex l) { return l != kUnlabeled; }));
}

namespace {

// Matching instance: edges on the left, capacity-limited vertex slots on the
// right. Edge e may occupy a slot of either endpoint.
struct SlotMatcher {
  const Multigraph& g;
  std::vector<Vertex> slot_vertex;           // slot -> vertex id
  std::vector<std::vector<int>> edge_slots;  // edge index -> candidate slots
  std::vector<int> slot_edge;                // slot -> matched edge or -1
  std::vector<char> visited;

  explicit SlotMatcher(const Multigraph& graph, const AlphaVector& alpha) : g(graph) {
    for (Vertex v : g.vertices()) {
      int cap = std::min(alpha.at(v), g.incident_edge_count(v));
      for (int i = 0; i < cap; ++i)
        slot_vertex.push_back(v);
    }
    edge_slots.resize(g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      for (std::size_t s = 0; s < slot_vertex.size(); ++s)
        if (edge.has_endpoint(slot_vertex[s]))
          edge_slots[e].push_back(static_cast<int>(s));
    }
    slot_edge.assign(slot_vertex.size(), -1);
  }

  bool augment(int e) {
    for (int s : edge_slots[static_cast<std::size_t>(e)]) {
      if (visited[static_cast<std::size_t>(s)])
        continue;
      visited[static_cast<std::size_t>(s)] = 1;
      if (slot_edge[static_cast<std::size_t>(s)] < 0 ||
          augment(slot_edge[static_cast<std::size_t>(s)])) {
        slot_edge[static_cast<std::size_t>(s)] = e;
        return true;
      }
    }
    return false;
  }

  MaxHeightResult solve() {
    int matched = 0;
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      visited.assign(slot_vertex.size(), 0);
      if (augment(e))
        ++matched;
    }
    MaxHeightResult result;
    result.height = matched;
    result.witness.labels.assign(g.edges().size(), kUnlabeled);
    for (std::size_t s = 0; s < slot_edge.size(); ++s)
      if (slot_edge[s] >= 0)
        result.witness.labels[static_cast<std::size_t>(slot_edge[s])] = slot_vertex[s];
    return result;
  }
};

} // namespace

MaxHeightResult max_height(const Multigraph& g, const AlphaVector& alpha) {
  require_alpha_keys_in(g, alpha);
  return SlotMatcher(g, alpha).solve();
}

namespace {

struct ExhaustiveSearch {
  const Multigraph& g;
  const AlphaVector& alpha;
  std::vector<int> used; // labels currently pointing at each vertex ordinal
  int best = 0;

  void walk(std::size_t e, int labeled) {
    if (e == g.edges().size()) {
      best = std::max(best, labeled);
      return;
    }
    const Edge& edge = g.edges()[e];
    walk(e + 1, labeled); // leave e unlabeled
    Vertex ends[2] = {edge.u, edge.w};
    int end_count = edge.is_loop() ? 1 : 2;
    for (int k = 0; k < end_count; ++k) {
      int ord = g.ordinal(ends[k]);
      if (used[static_cast<std::size_t>(ord)] + 1 > alpha.at(ends[k]))
        continue; // capacity condition would fail on every completion
      used[static_cast<std::size_t>(ord)] += 1;
      walk(e + 1, labeled + 1);
      used[static_cast<std::size_t>(ord)] -= 1;
    }
  }
};

} // namespace

int exhaustive_max_height(const Multigraph& g, const AlphaVector& alpha, int edge_limit) {
  require_alpha_keys_in(g, alpha);
  if (g.edge_count() > edge_limit)
    throw LimitError("exhaustive labeling search refused: " + std::to_string(g.edge_count()) +
                     " edges exceed the limit of " + std::to_string(edge_limit));
  ExhaustiveSearch search{g, alpha, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)};
  search.walk(0, 0);
  return search.best;
}

} // namespace gtm
