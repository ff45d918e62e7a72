#include "gtm/census.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gtm/errors.hpp"

namespace gtm {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i; // exact at every step: result is binom(n-k+i, i)
  }
  return result;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Vertex> kept_vertices(const Multigraph& g, std::span<const Vertex> w) {
  std::set<Vertex> drop;
  for (Vertex v : w) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    }
    drop.insert(v);
  }
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (!drop.contains(v)) keep.push_back(v);
  }
  return keep;
}

} // namespace

std::vector<OutDegreeClass> enumerate_classes(const Multigraph& g, std::size_t edge_limit) {
  if (static_cast<std::size_t>(g.edge_count()) > edge_limit) {
    throw LimitError("graph has " + std::to_string(g.edge_count()) +
                     " edges, above the enumeration limit of " + std::to_string(edge_limit));
  }

  const int n = g.vertex_count();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> flips; // (tail ordinal, head ordinal) per non-loop edge
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++out[static_cast<std::size_t>(g.ordinal(e.u))];
    } else {
      const int ou = g.ordinal(e.u);
      const int ow = g.ordinal(e.w);
      ++out[static_cast<std::size_t>(ou)];
      flips.emplace_back(ou, ow);
    }
  }

  // Gray-code walk: consecutive masks differ in one bit, so each step moves
  // a single unit of out-degree between the endpoints of one edge.
  std::unordered_map<std::vector<int>, std::uint64_t, VectorHash> seen;
  const std::uint64_t total = std::uint64_t{1} << flips.size();
  std::vector<bool> reversed(flips.size(), false);
  for (std::uint64_t k = 0;;) {
    ++seen[out];
    if (++k == total) break;
    const int b = std::countr_zero(k);
    auto [ou, ow] = flips[static_cast<std::size_t>(b)];
    if (reversed[static_cast<std::size_t>(b)]) {
      --out[static_cast<std::size_t>(ow)];
      ++out[static_cast<std::size_t>(ou)];
    } else {
      --out[static_cast<std::size_t>(ou)];
      ++out[static_cast<std::size_t>(ow)];
    }
    reversed[static_cast<std::size_t>(b)] = !reversed[static_cast<std::size_t>(b)];
  }

  std::vector<OutDegreeClass> classes;
  classes.reserve(seen.size());
  for (auto& [vec, mult] : seen) {
    classes.push_back({vec, mult});
  }
  std::sort(classes.begin(), classes.end(),
            [](const OutDegreeClass& a, const OutDegreeClass& b) { return a.degrees < b.degrees; });
  return classes;
}

BigInt class_weight(const Multigraph& g_full, std::span<const Vertex> keep,
                    std::span<const int> a) {
  if (keep.size() != a.size()) {
    throw DomainError("out-degree vector length " + std::to_string(a.size()) +
                      " does not match " + std::to_string(keep.size()) + " kept vertices");
  }
  BigInt product = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    product *= binomial(g_full.degree(keep[i]), a[i]);
    if (product == 0) break;
  }
  return product;
}

BigInt count_bases(const Multigraph& g, std::span<const Vertex> w, std::size_t edge_limit) {
  const std::vector<Vertex> keep = kept_vertices(g, w);
  const Multigraph induced = g.induced_subgraph(keep);
  BigInt total = 0;
  for (const OutDegreeClass& c : enumerate_classes(induced, edge_limit)) {
    total += class_weight(g, keep, c.degrees);
  }
  return total;
}

TableReport table_report(const Multigraph& g, std::span<const Vertex> w,
                         const std::optional<Multigraph>& alt_full, std::size_t edge_limit) {
  TableReport report;
  report.kept_vertices = kept_vertices(g, w);
  if (alt_full) {
    for (Vertex v : report.kept_vertices) {
      if (!alt_full->has_vertex(v)) {
        throw DomainError("alternate graph is missing kept vertex " + std::to_string(v));
      }
    }
  }

  const Multigraph induced = g.induced_subgraph(report.kept_vertices);
  report.orientations = orientation_count(induced);
  report.bases = 0;
  if (alt_full) report.alt_bases = BigInt(0);

  for (const OutDegreeClass& c : enumerate_classes(induced, edge_limit)) {
    ClassRow row;
    row.degrees = c.degrees;
    row.multiplicity = c.multiplicity;
    row.weight = class_weight(g, report.kept_vertices, c.degrees);
    report.bases += row.weight;
    if (alt_full) {
      row.alt_weight = class_weight(*alt_full, report.kept_vertices, c.degrees);
      *report.alt_bases += *row.alt_weight;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string degrees_text(const std::vector<int>& degrees) {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(degrees[i]);
  }
  s += ")";
  return s;
}

} // namespace

std::string to_text(const TableReport& report) {
  const bool alt = report.alt_bases.has_value();
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"a", "mult", "weight"});
  if (alt) cells.back().push_back("alt_weight");
  for (const ClassRow& row : report.rows) {
    cells.push_back({degrees_text(row.degrees), std::to_string(row.multiplicity),
                     row.weight.str()});
    if (alt) cells.back().push_back(row.alt_weight->str());
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }

  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) {
        out << std::string(width[i] - row[i].size(), ' ');
      }
    }
    out << "\n";
  }
  out << "orientations: " << report.orientations << "\n";
  out << "classes: " << report.rows.size() << "\n";
  out << "bases: " << report.bases.str() << "\n";
  if (alt) out << "alt_bases: " << report.alt_bases->str() << "\n";
  return out.str();
}

nlohmann::json to_json(const TableReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassRow& row : report.rows) {
    nlohmann::json entry;
    entry["a"] = row.degrees;
    entry["mult"] = row.multiplicity;
    entry["weight"] = row.weight.str();
    if (row.alt_weight) entry["alt_weight"] = row.alt_weight->str();
    classes.push_back(std::move(entry));
  }
  nlohmann::json totals;
  totals["orientations"] = report.orientations;
  totals["classes"] = report.rows.size();
  totals["bases"] = report.bases.str();
  if (report.alt_bases) totals["alt_bases"] = report.alt_bases->str();
  return nlohmann::json{{"classes", std::move(classes)}, {"totals", std::move(totals)}};
}

} // namespace gtm
