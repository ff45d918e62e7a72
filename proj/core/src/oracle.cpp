#include "gtm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>

#include "gtm/census.hpp"
#include "gtm/errors.hpp"
#include "combinatorics.hpp"

namespace gtm::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Augmenting-path matching of elements into family sets. Kept separate from
// the labeling machinery on purpose: this one never sees edges or degrees.
class FamilyMatcher {
public:
  FamilyMatcher(const SetSystem& sys, const GroundSet& x) : owner_(sys.family.size(), -1) {
    adj_.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < sys.family.size(); ++j) {
        const GroundSet& set = sys.family[j];
        if (std::binary_search(set.begin(), set.end(), x[i])) {
          adj_[i].push_back(static_cast<int>(j));
        }
      }
    }
  }

  int matched_count() {
    int matched = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      visited_.assign(owner_.size(), 0);
      if (augment(static_cast<int>(i))) ++matched;
    }
    return matched;
  }

private:
  bool augment(int element) {
    for (int j : adj_[static_cast<std::size_t>(element)]) {
      if (visited_[static_cast<std::size_t>(j)]) continue;
      visited_[static_cast<std::size_t>(j)] = 1;
      if (owner_[static_cast<std::size_t>(j)] < 0 || augment(owner_[static_cast<std::size_t>(j)])) {
        owner_[static_cast<std::size_t>(j)] = element;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> owner_;
  std::vector<char> visited_;
};

GroundSet normalized_subset(const SetSystem& sys, std::span<const GroundElement> x) {
  GroundSet sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const GroundElement& e : sorted) {
    if (!std::binary_search(sys.ground.begin(), sys.ground.end(), e)) {
      throw DomainError("element " + to_token(e) + " is outside the declared ground set");
    }
  }
  return sorted;
}

} // namespace

SetSystem make_system(const Presentation& p, GroundSet ground) {
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  SetSystem sys{std::move(ground), {}};
  for (const GroundSet& raw : p.sets) {
    GroundSet set = raw;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (const GroundElement& e : set) {
      if (!std::binary_search(sys.ground.begin(), sys.ground.end(), e)) {
        throw DomainError("family set member " + to_token(e) + " is outside the ground set");
      }
    }
    sys.family.push_back(std::move(set));
  }
  return sys;
}

bool is_partial_transversal(const SetSystem& sys, std::span<const GroundElement> x) {
  const GroundSet sorted = normalized_subset(sys, x);
  FamilyMatcher matcher(sys, sorted);
  return matcher.matched_count() == static_cast<int>(sorted.size());
}

int system_rank(const SetSystem& sys) {
  FamilyMatcher matcher(sys, sys.ground);
  return matcher.matched_count();
}

std::vector<GroundSet> enumerate_bases(const SetSystem& sys, const BasisLimits& limits) {
  const int n = static_cast<int>(sys.ground.size());
  if (sys.ground.size() > limits.max_ground) {
    throw LimitError("ground set of size " + std::to_string(n) +
                     " exceeds the sweep limit of " + std::to_string(limits.max_ground));
  }
  const int r = system_rank(sys);
  if (r > limits.max_rank) {
    throw LimitError("system rank " + std::to_string(r) + " exceeds the sweep limit of " +
                     std::to_string(limits.max_rank));
  }

  std::vector<GroundSet> bases;
  if (r == 0) {
    bases.push_back({});
    return bases;
  }

  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  GroundSet subset(static_cast<std::size_t>(r));
  do {
    for (int i = 0; i < r; ++i) {
      subset[static_cast<std::size_t>(i)] = sys.ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    FamilyMatcher matcher(sys, subset);
    if (matcher.matched_count() == r) bases.push_back(subset);
  } while (detail::next_combination(idx, n));
  return bases;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out;
  out["check"] = v.check;
  out["instance"] = v.instance;
  out["pass"] = v.pass;
  if (v.witness) out["witness"] = *v.witness;
  out["elapsed_ms"] = v.elapsed_ms;
  return out;
}

Verdict check_rank_axioms(const RankFn& rank_fn, const GroundSet& ground,
                          const std::string& instance, std::size_t max_ground) {
  const auto start = Clock::now();
  Verdict v;
  v.check = "rank-axioms";
  v.instance = instance;

  const std::size_t n = ground.size();
  if (n > max_ground) {
    throw LimitError("ground set of size " + std::to_string(n) +
                     " exceeds the axiom-sweep limit of " + std::to_string(max_ground));
  }

  const std::uint32_t count = std::uint32_t{1} << n;
  auto subset_of = [&](std::uint32_t mask) {
    GroundSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) s.push_back(ground[i]);
    }
    return s;
  };

  std::vector<int> rank(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    rank[mask] = rank_fn(subset_of(mask));
  }

  auto fail = [&](std::string witness) {
    v.pass = false;
    v.witness = std::move(witness);
    v.elapsed_ms = ms_since(start);
    return v;
  };

  if (rank[0] != 0) {
    return fail("r({}) = " + std::to_string(rank[0]) + ", expected 0");
  }
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const int size = std::popcount(mask);
    if (rank[mask] < 0 || rank[mask] > size) {
      return fail("r(" + to_string(subset_of(mask)) + ") = " + std::to_string(rank[mask]) +
                  " is outside 0.." + std::to_string(size));
    }
  }
  for (std::uint32_t y = 0; y < count; ++y) {
    for (std::uint32_t x = y;; x = (x - 1) & y) {
      if (rank[x] > rank[y]) {
        return fail("monotonicity fails: r(" + to_string(subset_of(x)) + ") = " +
                    std::to_string(rank[x]) + " > r(" + to_string(subset_of(y)) + ") = " +
                    std::to_string(rank[y]));
      }
      if (x == 0) break;
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a; b < count; ++b) {
      const int lhs = rank[a | b] + rank[a & b];
      const int rhs = rank[a] + rank[b];
      if (lhs > rhs) {
        return fail("submodularity fails for X=" + to_string(subset_of(a)) + " Y=" +
                    to_string(subset_of(b)) + ": r(X∪Y)+r(X∩Y) = " + std::to_string(lhs) +
                    " > " + std::to_string(rhs) + " = r(X)+r(Y)");
      }
    }
  }

  v.pass = true;
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict check_basis_exchange(const std::vector<GroundSet>& bases, const std::string& instance) {
  const auto start = Clock::now();
  Verdict v;
  v.check = "basis-exchange";
  v.instance = instance;

  if (bases.empty()) throw DomainError("basis list is empty");
  std::vector<GroundSet> sorted = bases;
  for (GroundSet& b : sorted) std::sort(b.begin(), b.end());
  for (const GroundSet& b : sorted) {
    if (b.size() != sorted.front().size()) {
      throw DomainError("bases differ in size");
    }
  }
  std::vector<GroundSet> lookup = sorted;
  std::sort(lookup.begin(), lookup.end());

  for (const GroundSet& b1 : sorted) {
    for (const GroundSet& b2 : sorted) {
      GroundSet out_only; // b1 \ b2
      std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                          std::back_inserter(out_only));
      GroundSet in_only; // b2 \ b1
      std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                          std::back_inserter(in_only));
      for (const GroundElement& x : out_only) {
        GroundSet stripped;
        stripped.reserve(b1.size());
        for (const GroundElement& e : b1) {
          if (!(e == x)) stripped.push_back(e);
        }
        bool exchanged = false;
        for (const GroundElement& y : in_only) {
          GroundSet candidate = stripped;
          candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), y), y);
          if (std::binary_search(lookup.begin(), lookup.end(), candidate)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          v.pass = false;
          v.witness = "no replacement for " + to_token(x) + " out of B1=" + to_string(b1) +
                      " toward B2=" + to_string(b2);
          v.elapsed_ms = ms_since(start);
          return v;
        }
      }
    }
  }

  v.pass = true;
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict cross_validate(const Multigraph& g, std::span<const Vertex> w,
                       const std::string& instance, const BasisLimits& limits) {
  const auto start = Clock::now();
  Verdict v;
  v.check = "cross-validate";
  v.instance = instance;

  const TransversalMatroid m(g, std::vector<Vertex>(w.begin(), w.end()));
  const BigInt formula = count_bases(g, w);
  const SetSystem dual = make_system(m.dual_presentation(), m.ground());
  const std::vector<GroundSet> dual_bases = enumerate_bases(dual, limits);

  std::uint64_t complement_bases = 0;
  std::optional<GroundSet> first_bad;
  for (const GroundSet& b : dual_bases) {
    const GroundSet c = m.complement(b);
    if (m.is_basis(c)) {
      ++complement_bases;
    } else if (!first_bad) {
      first_bad = c;
    }
  }

  const bool counts_agree = formula == dual_bases.size() && complement_bases == dual_bases.size();
  v.pass = counts_agree && !first_bad;
  if (first_bad) {
    v.witness = "complement " + to_string(*first_bad) + " of an enumerated basis is not a basis";
  } else if (!counts_agree) {
    v.witness = "counts disagree: formula=" + formula.str() +
                " enumerated=" + std::to_string(dual_bases.size()) +
                " complements=" + std::to_string(complement_bases);
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

namespace {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

std::vector<NamedGraph> corpus_graphs() {
  std::vector<NamedGraph> out;
  auto add = [&out](std::string name, int n, std::vector<Edge> edges) {
    out.push_back({std::move(name), Multigraph::with_vertex_count(n, std::move(edges))});
  };

  // Every simple connected graph on at most 4 vertices.
  add("k1", 1, {});
  add("k2", 2, {{1, 2}});
  add("p3", 3, {{1, 2}, {2, 3}});
  add("k3", 3, {{1, 2}, {1, 3}, {2, 3}});
  add("p4", 4, {{1, 2}, {2, 3}, {3, 4}});
  add("star4", 4, {{1, 2}, {1, 3}, {1, 4}});
  add("paw", 4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  add("c4", 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  add("diamond", 4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  add("k4", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  // Parallel edges and loops.
  add("double_edge", 2, {{1, 2}, {1, 2}});
  add("loop", 1, {{1, 1}});
  add("two_loops", 1, {{1, 1}, {1, 1}});

  // Seeded random multigraphs; loops and parallels can and do appear.
  std::mt19937_64 rng(0x746d6731);
  auto random_graph = [&rng](int n, int edge_count) {
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count; ++i) {
      const Vertex u = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      const Vertex w = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
      edges.push_back({u, w});
    }
    return Multigraph::with_vertex_count(n, std::move(edges));
  };
  out.push_back({"random_a", random_graph(4, 6)});
  out.push_back({"random_b", random_graph(5, 5)});
  out.push_back({"random_c", random_graph(5, 6)});
  return out;
}

std::string deletion_label(std::span<const Vertex> w) {
  std::string s = "w={";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w[i]);
  }
  s += "}";
  return s;
}

} // namespace

std::vector<CorpusInstance> verification_corpus() {
  std::vector<CorpusInstance> out;
  for (const NamedGraph& named : corpus_graphs()) {
    const std::vector<Vertex>& vs = named.graph.vertices();
    std::vector<std::vector<Vertex>> deletions;
    deletions.push_back({});
    for (Vertex v : vs) deletions.push_back({v});
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        deletions.push_back({vs[i], vs[j]});
      }
    }
    for (std::vector<Vertex>& w : deletions) {
      out.push_back({named.name + " " + deletion_label(w), named.graph, std::move(w)});
    }
  }
  return out;
}

} // namespace gtm::oracle
