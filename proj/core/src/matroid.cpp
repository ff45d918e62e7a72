#include "gtm/matroid.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "gtm/errors.hpp"
#include "combinatorics.hpp"

namespace gtm {

namespace {

int parse_positive_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0) {
    throw ParseError("bad " + std::string(what) + " in ground element token");
  }
  return value;
}

} // namespace

std::string to_token(const GroundElement& e) {
  return std::to_string(e.vertex) + ":" + std::to_string(e.index);
}

GroundElement parse_ground_token(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos || token.find(':', colon + 1) != std::string_view::npos) {
    throw ParseError("ground element must look like v:i, got \"" + std::string(token) + "\"");
  }
  GroundElement e;
  e.vertex = parse_positive_int(token.substr(0, colon), "vertex");
  e.index = parse_positive_int(token.substr(colon + 1), "slot index");
  return e;
}

std::string to_string(const GroundSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += to_token(x[i]);
  }
  out += "}";
  return out;
}

GroundSet ground_set(const Multigraph& g) {
  GroundSet s;
  s.reserve(static_cast<std::size_t>(g.degree_sum()));
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    for (int i = 1; i <= d; ++i) s.push_back({v, i});
  }
  return s;
}

GroundSet perfect_subset(const Multigraph& g, std::span<const Vertex> w) {
  std::set<Vertex> seen;
  for (Vertex v : w) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    }
    seen.insert(v);
  }
  GroundSet s;
  for (Vertex v : seen) {
    const int d = g.degree(v);
    for (int i = 1; i <= d; ++i) s.push_back({v, i});
  }
  return s;
}

AlphaVector alpha_of(const Multigraph& g, std::span<const GroundElement> x) {
  GroundSet sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::map<Vertex, int> counts;
  for (const GroundElement& e : sorted) {
    if (!g.has_vertex(e.vertex)) {
      throw DomainError("ground element " + to_token(e) + " names an unknown vertex");
    }
    if (e.index < 1 || e.index > g.degree(e.vertex)) {
      throw DomainError("ground element " + to_token(e) + " has slot index outside 1.." +
                        std::to_string(g.degree(e.vertex)));
    }
    ++counts[e.vertex];
  }
  return AlphaVector(std::move(counts));
}

TransversalMatroid::TransversalMatroid(Multigraph g, std::vector<Vertex> w)
    : g_(std::move(g)) {
  std::set<Vertex> deleted;
  for (Vertex v : w) {
    if (!g_.has_vertex(v)) {
      throw DomainError("cannot delete vertex " + std::to_string(v) + ": not in the graph");
    }
    deleted.insert(v);
  }
  w_.assign(deleted.begin(), deleted.end());

  for (Vertex v : g_.vertices()) {
    if (deleted.contains(v)) continue;
    const int d = g_.degree(v);
    for (int i = 1; i <= d; ++i) ground_.push_back({v, i});
  }
  rank_ = max_height(g_, alpha_of(g_, ground_)).height;
}

GroundSet TransversalMatroid::normalize(std::span<const GroundElement> x) const {
  GroundSet sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const GroundElement& e : sorted) {
    if (!std::binary_search(ground_.begin(), ground_.end(), e)) {
      throw DomainError("element " + to_token(e) + " is outside the ground set");
    }
  }
  return sorted;
}

int TransversalMatroid::rank(std::span<const GroundElement> x) const {
  const GroundSet sorted = normalize(x);
  return max_height(g_, alpha_of(g_, sorted)).height;
}

bool TransversalMatroid::is_independent(std::span<const GroundElement> x) const {
  const GroundSet sorted = normalize(x);
  return max_height(g_, alpha_of(g_, sorted)).height == static_cast<int>(sorted.size());
}

bool TransversalMatroid::is_basis(std::span<const GroundElement> b) const {
  const GroundSet sorted = normalize(b);
  return static_cast<int>(sorted.size()) == rank_ &&
         max_height(g_, alpha_of(g_, sorted)).height == rank_;
}

TransversalMatroid TransversalMatroid::delete_vertices(std::span<const Vertex> w) const {
  std::vector<Vertex> merged = w_;
  merged.insert(merged.end(), w.begin(), w.end());
  return TransversalMatroid(g_, std::move(merged));
}

namespace {

GroundSet endpoint_slots(const Multigraph& g, const Edge& e) {
  GroundSet set;
  const int du = g.degree(e.u);
  for (int i = 1; i <= du; ++i) set.push_back({e.u, i});
  if (!e.is_loop()) {
    const int dw = g.degree(e.w);
    for (int i = 1; i <= dw; ++i) set.push_back({e.w, i});
  }
  std::sort(set.begin(), set.end());
  return set;
}

} // namespace

Presentation TransversalMatroid::primal_presentation() const {
  if (!w_.empty()) {
    throw DomainError("the defining family is only available before vertex deletion");
  }
  Presentation p;
  for (int j = 0; j < g_.edge_count(); ++j) {
    p.edge_indices.push_back(j);
    p.sets.push_back(endpoint_slots(g_, g_.edges()[static_cast<std::size_t>(j)]));
  }
  return p;
}

Presentation TransversalMatroid::dual_presentation() const {
  std::vector<Vertex> keep;
  for (Vertex v : g_.vertices()) {
    if (!std::binary_search(w_.begin(), w_.end(), v)) keep.push_back(v);
  }
  Presentation p;
  for (int j : g_.edges_within(keep)) {
    p.edge_indices.push_back(j);
    p.sets.push_back(endpoint_slots(g_, g_.edges()[static_cast<std::size_t>(j)]));
  }
  return p;
}

GroundSet TransversalMatroid::complement(std::span<const GroundElement> x) const {
  const GroundSet sorted = normalize(x);
  GroundSet rest;
  std::set_difference(ground_.begin(), ground_.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(rest));
  return rest;
}

bool check_self_dual(const TransversalMatroid& m, const SelfDualOptions& options) {
  if (!m.deleted_vertices().empty()) {
    throw DomainError("self-duality check applies before vertex deletion");
  }
  const GroundSet& ground = m.ground();
  const int n = static_cast<int>(ground.size());
  const int r = m.rank();

  if (ground.size() <= options.exhaustive_ground_limit) {
    if (r == 0) return m.is_basis(GroundSet{}) == m.is_basis(ground);
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      GroundSet b;
      b.reserve(static_cast<std::size_t>(r));
      for (int i : idx) b.push_back(ground[static_cast<std::size_t>(i)]);
      if (!m.is_basis(b)) continue;
      if (!m.is_basis(m.complement(b))) return false;
    } while (detail::next_combination(idx, n));
    return true;
  }

  if (!options.sample_when_large) {
    throw LimitError("ground set of size " + std::to_string(n) +
                     " exceeds the exhaustive limit of " +
                     std::to_string(options.exhaustive_ground_limit) +
                     "; enable sampling to proceed");
  }

  std::mt19937_64 rng(options.seed);
  GroundSet order = ground;
  for (int s = 0; s < options.sample_count; ++s) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    // Greedy completion of a random order yields a basis.
    GroundSet b;
    for (const GroundElement& e : order) {
      if (static_cast<int>(b.size()) == r) break;
      b.push_back(e);
      if (!m.is_independent(b)) b.pop_back();
    }
    if (!m.is_basis(m.complement(b))) return false;
  }
  return true;
}

} // namespace gtm
