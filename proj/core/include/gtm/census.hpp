#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "gtm/graph.hpp"

namespace gtm {

// Counts stay exact end to end; they outgrow fixed-width integers fast.
using BigInt = boost::multiprecision::cpp_int;

// binom(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

// One equivalence class of orientations: all orientations sharing this
// out-degree vector, read in the vertex order of the censused graph.
struct OutDegreeClass {
  std::vector<int> degrees;
  std::uint64_t multiplicity = 0;
};

// Every distinct out-degree vector of g with its exact multiplicity, sorted
// lexicographically. Walks all 2^(#non-loop edges) orientations with
// incremental out-degree updates.
std::vector<OutDegreeClass> enumerate_classes(
    const Multigraph& g, std::size_t edge_limit = kDefaultEnumerationLimit);

// Product over i of binom(deg_{g_full}(keep[i]), a[i]). Degrees come from
// g_full even when a was censused on a subgraph; entries of a above the
// degree make the product 0 rather than an error.
BigInt class_weight(const Multigraph& g_full, std::span<const Vertex> keep,
                    std::span<const int> a);

// Number of bases of the degree-slot matroid of g after deleting the
// vertices in w: the sum of class_weight over the distinct out-degree
// classes of g[V\w], with degrees taken in g itself. Multiplicities play no
// part in the sum.
BigInt count_bases(const Multigraph& g, std::span<const Vertex> w,
                   std::size_t edge_limit = kDefaultEnumerationLimit);

struct ClassRow {
  std::vector<int> degrees;
  std::uint64_t multiplicity = 0;
  BigInt weight;
  std::optional<BigInt> alt_weight;
};

struct TableReport {
  std::vector<Vertex> kept_vertices;
  std::vector<ClassRow> rows;
  std::uint64_t orientations = 0;
  BigInt bases;
  std::optional<BigInt> alt_bases;
};

// Full class listing for g[V\w]: one row per class with its multiplicity and
// weight under g's degrees. When alt_full is given (a graph that also
// contains the kept vertices) each row additionally carries the weight under
// alt_full's degrees, so one census prices the bases of two graphs sharing
// the same kept subgraph.
TableReport table_report(const Multigraph& g, std::span<const Vertex> w,
                         const std::optional<Multigraph>& alt_full = std::nullopt,
                         std::size_t edge_limit = kDefaultEnumerationLimit);

// Aligned text table plus totals.
std::string to_text(const TableReport& report);

// {classes: [{a, mult, weight, alt_weight?}], totals: {orientations,
// classes, bases, alt_bases?}}; weights are decimal strings.
nlohmann::json to_json(const TableReport& report);

} // namespace gtm
