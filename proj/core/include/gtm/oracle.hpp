#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtm/matroid.hpp"

// Brute-force ground truth. Everything here favors directness over speed and
// shares no machinery with the fast paths it is meant to check: independence
// is re-derived from scratch by matching subsets against an explicit set
// system, so agreement between the two routes is evidence.
namespace gtm::oracle {

// A finite family of subsets of a declared ground set. The family is an
// ordered multiset: repeated sets are meaningful and stay repeated.
struct SetSystem {
  GroundSet ground;
  std::vector<GroundSet> family;
};

// Wraps a presentation as a set system over the given ground. Family sets
// must lie inside the ground.
SetSystem make_system(const Presentation& p, GroundSet ground);

// True iff x can be matched injectively into the family, each element landing
// in a set that contains it. x must lie inside sys.ground.
bool is_partial_transversal(const SetSystem& sys, std::span<const GroundElement> x);

// Size of the largest partial transversal.
int system_rank(const SetSystem& sys);

struct BasisLimits {
  std::size_t max_ground = 20;
  int max_rank = 10;
};

// All maximum-size partial transversals, in lexicographic order. Sweeps
// every rank-sized subset, so both bounds are enforced up front.
std::vector<GroundSet> enumerate_bases(const SetSystem& sys, const BasisLimits& limits = {});

// Outcome of one verification check on one instance.
struct Verdict {
  std::string check;
  std::string instance;
  bool pass = false;
  std::optional<std::string> witness; // first counterexample found
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const Verdict& v);

using RankFn = std::function<int(std::span<const GroundElement>)>;

// Exhaustively verifies the rank axioms of rank_fn over every subset of
// ground: r of the empty set is 0, ranks stay within 0..|X|, ranks never
// drop under supersets, and rank is submodular over all pairs. Memoizes all
// 2^n subset ranks first, so ground size is capped.
Verdict check_rank_axioms(const RankFn& rank_fn, const GroundSet& ground,
                          const std::string& instance, std::size_t max_ground = 10);

// Verifies the exchange axiom over an explicit basis list: for every pair
// (B1, B2) and every x in B1\B2 some y in B2\B1 has B1-x+y in the list.
// The list must be nonempty with all members the same size.
Verdict check_basis_exchange(const std::vector<GroundSet>& bases, const std::string& instance);

// The central consistency check. Counts the bases of the degree-slot matroid
// of g with w deleted three independent ways: the orientation-census formula,
// brute-force enumeration over the dual presentation, and complements of the
// enumerated sets tested against the matroid's own basis predicate. With w
// empty the third route doubles as the self-duality check, since it asserts
// the complement of every basis is again a basis.
Verdict cross_validate(const Multigraph& g, std::span<const Vertex> w,
                       const std::string& instance, const BasisLimits& limits = {});

struct CorpusInstance {
  std::string name; // graph name plus the deleted vertex set
  Multigraph graph;
  std::vector<Vertex> vertex_deletions;
};

// The standing verification corpus: every simple connected graph on up to 4
// vertices, a doubled edge, one and two loops on a single vertex, and three
// seeded random multigraphs, each paired with every vertex deletion set of
// size at most 2. Deterministic across runs.
std::vector<CorpusInstance> verification_corpus();

} // namespace gtm::oracle
