#include "gtm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gtm {

namespace {

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i)
    vs[static_cast<std::size_t>(i)] = i + 1;
  return vs;
}

} // namespace

Multigraph::Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  Vertex max_id = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] <= 0)
      throw DomainError("vertex identifiers must be positive");
    if (i > 0 && vertices_[i] <= vertices_[i - 1])
      throw DomainError("vertex identifiers must be strictly increasing");
    max_id = vertices_[i];
  }

  slot_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    slot_[static_cast<std::size_t>(vertices_[i])] = static_cast<int>(i);

  degree_.assign(vertices_.size(), 0);
  incident_.assign(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    if (!has_vertex(e.u) || !has_vertex(e.w))
      throw DomainError("edge endpoint is not a declared vertex");
    degree_[static_cast<std::size_t>(ordinal(e.u))] += 1;
    degree_[static_cast<std::size_t>(ordinal(e.w))] += 1; // a loop lands here twice
    incident_[static_cast<std::size_t>(ordinal(e.u))] += 1;
    if (!e.is_loop())
      incident_[static_cast<std::size_t>(ordinal(e.w))] += 1;
    else
      ++loop_count_;
  }
}

Multigraph Multigraph::with_vertex_count(int n, std::vector<Edge> edges) {
  return Multigraph(iota_vertices(n), std::move(edges));
}

bool Multigraph::has_vertex(Vertex v) const noexcept {
  return v > 0 && static_cast<std::size_t>(v) < slot_.size() &&
         slot_[static_cast<std::size_t>(v)] >= 0;
}

int Multigraph::ordinal(Vertex v) const {
  if (!has_vertex(v))
    throw DomainError("unknown vertex " + std::to_string(v));
  return slot_[static_cast<std::size_t>(v)];
}

int Multigraph::degree(Vertex v) const {
  return degree_[static_cast<std::size_t>(ordinal(v))];
}

int Multigraph::incident_edge_count(Vertex v) const {
  return incident_[static_cast<std::size_t>(ordinal(v))];
}

int Multigraph::degree_sum() const noexcept {
  return 2 * edge_count();
}

Multigraph Multigraph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<Vertex> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Vertex v : kept)
    ordinal(v); // membership check

  std::vector<char> in_keep(slot_.size(), 0);
  for (Vertex v : kept)
    in_keep[static_cast<std::size_t>(v)] = 1;

  std::vector<Edge> kept_edges;
  for (const Edge& e : edges_)
    if (in_keep[static_cast<std::size_t>(e.u)] && in_keep[static_cast<std::size_t>(e.w)])
      kept_edges.push_back(e);

  return Multigraph(std::move(kept), std::move(kept_edges));
}

std::vector<int> Multigraph::edges_meeting(std::span<const Vertex> w) const {
  std::vector<char> in_w(slot_.size(), 0);
  for (Vertex v : w) {
    ordinal(v);
    in_w[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> hit;
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    if (in_w[static_cast<std::size_t>(e.u)] || in_w[static_cast<std::size_t>(e.w)])
      hit.push_back(i);
  }
  return hit;
}

std::vector<int> Multigraph::edges_within(std::span<const Vertex> keep) const {
  std::vector<char> in_keep(slot_.size(), 0);
  for (Vertex v : keep) {
    ordinal(v);
    in_keep[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> inside;
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    if (in_keep[static_cast<std::size_t>(e.u)] && in_keep[static_cast<std::size_t>(e.w)])
      inside.push_back(i);
  }
  return inside;
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t')
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

} // namespace

Multigraph parse_graph(std::string_view text) {
  int n = -1, m = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  int last_content_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#')
      continue;
    last_content_line = lineno;

    if (n < 0) {
      if (tokens.size() != 2)
        throw ParseError("expected header \"n m\"", lineno);
      if (!parse_int(tokens[0], n) || !parse_int(tokens[1], m) || n < 0 || m < 0)
        throw ParseError("malformed header counts", lineno);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }

    if (static_cast<int>(edges.size()) >= m)
      throw ParseError("more edge lines than declared in header", lineno);
    if (tokens.size() != 2)
      throw ParseError("expected edge line \"u w\"", lineno);
    int u = 0, w = 0;
    if (!parse_int(tokens[0], u) || !parse_int(tokens[1], w))
      throw ParseError("malformed edge line", lineno);
    if (u < 1 || u > n || w < 1 || w > n)
      throw ParseError("endpoint out of range 1.." + std::to_string(n), lineno);
    edges.push_back(Edge{u, w});
  }

  if (n < 0)
    throw ParseError("missing header line \"n m\"");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     last_content_line);

  return Multigraph::with_vertex_count(n, std::move(edges));
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<int> out_degrees(const Multigraph& g, const Orientation& o) {
  if (o.arcs.size() != g.edges().size())
    throw DomainError("orientation must assign a direction to every edge");
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    const Arc& a = o.arcs[i];
    const Edge& e = g.edges()[i];
    const bool forward = a.tail == e.u && a.head == e.w;
    const bool backward = a.tail == e.w && a.head == e.u;
    if (!forward && !backward)
      throw DomainError("arc does not match the underlying edge");
    out[static_cast<std::size_t>(g.ordinal(a.tail))] += 1;
  }
  return out;
}

std::uint64_t orientation_count(const Multigraph& g) {
  return std::uint64_t{1} << g.non_loop_edge_count();
}

OrientationStream::OrientationStream(const Multigraph& g, std::size_t edge_limit)
    : g_(&g) {
  if (static_cast<std::size_t>(g.edge_count()) > edge_limit)
    throw LimitError("orientation enumeration refused: " + std::to_string(g.edge_count()) +
                     " edges exceed the limit of " + std::to_string(edge_limit));
  for (int i = 0; i < g.edge_count(); ++i)
    if (!g.edges()[static_cast<std::size_t>(i)].is_loop())
      flips_.push_back(i);
  total_ = std::uint64_t{1} << flips_.size();
}

std::optional<Orientation> OrientationStream::next() {
  if (mask_ == total_)
    return std::nullopt;
  Orientation o;
  o.arcs.resize(g_->edges().size());
  for (std::size_t i = 0; i < g_->edges().size(); ++i) {
    const Edge& e = g_->edges()[i];
    o.arcs[i] = Arc{e.u, e.w};
  }
  for (std::size_t j = 0; j < flips_.size(); ++j) {
    if (mask_ >> j & 1) {
      const Edge& e = g_->edges()[static_cast<std::size_t>(flips_[j])];
      o.arcs[static_cast<std::size_t>(flips_[j])] = Arc{e.w, e.u};
    }
  }
  ++mask_;
  return o;
}

std::vector<Orientation> all_orientations(const Multigraph& g, std::size_t edge_limit) {
  OrientationStream stream(g, edge_limit);
  std::vector<Orientation> out;
  out.reserve(static_cast<std::size_t>(stream.total()));
  while (auto o = stream.next())
    out.push_back(std::move(*o));
  return out;
}

} // namespace gtm
