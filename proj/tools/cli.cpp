#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gtm/census.hpp"
#include "gtm/errors.hpp"
#include "gtm/labeling.hpp"
#include "gtm/matroid.hpp"
#include "gtm/oracle.hpp"

namespace gtm::cli {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> vs;
  for (const std::string& part : split_csv(text)) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || value <= 0) {
      throw ParseError("bad vertex \"" + part + "\" in list \"" + text + "\"");
    }
    vs.push_back(value);
  }
  return vs;
}

std::vector<GroundElement> parse_ground_list(const std::string& text) {
  std::vector<GroundElement> xs;
  for (const std::string& part : split_csv(text)) {
    xs.push_back(parse_ground_token(part));
  }
  return xs;
}

std::size_t resolve_limit(const Invocation& inv) {
  if (inv.limit) return *inv.limit;
  if (const char* env = std::getenv("GTM_LIMIT")) {
    std::size_t value = 0;
    const std::string text = env;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError("GTM_LIMIT is not a nonnegative integer: \"" + text + "\"");
    }
    return value;
  }
  return kDefaultEnumerationLimit;
}

std::string deletion_label(const std::vector<Vertex>& w) {
  std::string s = "w={";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w[i]);
  }
  s += "}";
  return s;
}

void emit_json(std::ostream& out, const nlohmann::json& doc) {
  out << doc.dump() << "\n";
}

void run_info(const Multigraph& g, const std::vector<Vertex>& w, bool json, std::ostream& out) {
  const TransversalMatroid m(g, w);
  std::vector<int> degrees;
  for (Vertex v : g.vertices()) degrees.push_back(g.degree(v));

  if (json) {
    nlohmann::json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    doc["loops"] = g.loop_count();
    doc["degrees"] = degrees;
    doc["w"] = m.deleted_vertices();
    doc["ground"] = m.ground().size();
    doc["rank"] = m.rank();
    emit_json(out, doc);
    return;
  }
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "loops: " << g.loop_count() << "\n";
  out << "degrees:";
  for (int d : degrees) out << " " << d;
  out << "\n";
  out << "deleted: " << deletion_label(m.deleted_vertices()) << "\n";
  out << "ground: " << m.ground().size() << "\n";
  out << "rank: " << m.rank() << "\n";
}

void run_classes(const Multigraph& g, const std::vector<Vertex>& w, std::size_t limit,
                 bool json, std::ostream& out) {
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (std::find(w.begin(), w.end(), v) == w.end()) keep.push_back(v);
  }
  for (Vertex v : w) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  const Multigraph censused = g.induced_subgraph(keep);
  const std::vector<OutDegreeClass> classes = enumerate_classes(censused, limit);
  const std::uint64_t orientations = orientation_count(censused);

  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const OutDegreeClass& c : classes) {
      rows.push_back({{"a", c.degrees}, {"mult", c.multiplicity}});
    }
    nlohmann::json doc;
    doc["classes"] = std::move(rows);
    doc["totals"] = {{"orientations", orientations}, {"classes", classes.size()}};
    emit_json(out, doc);
    return;
  }
  for (const OutDegreeClass& c : classes) {
    out << "(";
    for (std::size_t i = 0; i < c.degrees.size(); ++i) {
      if (i > 0) out << ",";
      out << c.degrees[i];
    }
    out << ") " << c.multiplicity << "\n";
  }
  out << "orientations: " << orientations << "\n";
  out << "classes: " << classes.size() << "\n";
}

// The verify battery. Each check is independent; checks that do not apply to
// the instance are reported as skipped rather than silently dropped.
struct SkippedCheck {
  std::string check;
  std::string reason;
};

oracle::Verdict rank_identities(const Multigraph& g, const std::vector<Vertex>& w,
                                const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  oracle::Verdict v;
  v.check = "rank-identities";
  v.instance = label;

  const TransversalMatroid whole(g);
  const int full_rank = whole.rank();
  const GroundSet sw = perfect_subset(g, w);
  const int sw_rank = whole.rank(sw);
  const int edges_meeting = static_cast<int>(g.edges_meeting(w).size());

  v.pass = full_rank == g.edge_count() && sw_rank == edges_meeting;
  if (!v.pass) {
    std::ostringstream witness;
    witness << "r(S) = " << full_rank << " with |E| = " << g.edge_count()
            << "; r(S(W)) = " << sw_rank << " with " << edges_meeting << " edges meeting W";
    v.witness = witness.str();
  }
  v.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

oracle::Verdict self_duality(const TransversalMatroid& m, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  oracle::Verdict v;
  v.check = "self-dual";
  v.instance = label;
  v.pass = check_self_dual(m);
  if (!v.pass) v.witness = "some basis has a non-basis complement";
  v.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::string alpha_text(const Multigraph& g, const AlphaVector& alpha) {
  std::string s = "(";
  const std::vector<Vertex>& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(alpha.at(vs[i]));
  }
  s += ")";
  return s;
}

oracle::Verdict labeling_agreement(const Multigraph& g, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  oracle::Verdict v;
  v.check = "labeling-agreement";
  v.instance = label;
  v.pass = true;

  auto compare = [&](const AlphaVector& alpha) {
    const MaxHeightResult fast = max_height(g, alpha);
    const int slow = exhaustive_max_height(g, alpha);
    if (fast.height != slow) {
      v.pass = false;
      v.witness = "heights disagree for alpha=" + alpha_text(g, alpha) + ": matching says " +
                  std::to_string(fast.height) + ", exhaustive says " + std::to_string(slow);
      return false;
    }
    if (!is_valid_labeling(g, alpha, fast.witness) || height(fast.witness) != fast.height) {
      v.pass = false;
      v.witness = "matching witness is not a valid labeling of height " +
                  std::to_string(fast.height) + " for alpha=" + alpha_text(g, alpha);
      return false;
    }
    return true;
  };

  const std::vector<Vertex>& vs = g.vertices();
  double space = 1;
  for (Vertex v0 : vs) space *= g.degree(v0) + 1;

  if (space <= 100000) {
    std::vector<int> caps(vs.size(), 0);
    while (true) {
      std::map<Vertex, int> m;
      for (std::size_t i = 0; i < vs.size(); ++i) m[vs[i]] = caps[i];
      if (!compare(AlphaVector(std::move(m)))) break;
      std::size_t pos = 0;
      while (pos < vs.size() && caps[pos] == g.degree(vs[pos])) {
        caps[pos] = 0;
        ++pos;
      }
      if (pos == vs.size()) break;
      ++caps[pos];
    }
  } else {
    std::mt19937_64 rng(0xa1fa);
    for (int trial = 0; trial < 200 && v.pass; ++trial) {
      std::map<Vertex, int> m;
      for (Vertex v0 : vs) {
        m[v0] = static_cast<int>(rng() % static_cast<std::uint64_t>(g.degree(v0) + 1));
      }
      compare(AlphaVector(std::move(m)));
    }
  }

  v.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

int run_verify(const Multigraph& g, const std::vector<Vertex>& w, const std::string& path,
               bool json, std::ostream& out) {
  const std::string label = path + " " + deletion_label(w);
  std::vector<oracle::Verdict> verdicts;
  std::vector<SkippedCheck> skipped;

  verdicts.push_back(oracle::cross_validate(g, w, label));
  verdicts.push_back(rank_identities(g, w, label));

  const TransversalMatroid m(g, w);
  constexpr std::size_t kAxiomSweepCap = 12;
  if (m.ground().size() <= kAxiomSweepCap) {
    verdicts.push_back(oracle::check_rank_axioms(
        [&m](std::span<const GroundElement> x) { return m.rank(x); }, m.ground(), label,
        kAxiomSweepCap));
  } else {
    skipped.push_back({"rank-axioms", "ground size " + std::to_string(m.ground().size()) +
                                          " exceeds the sweep cap of " +
                                          std::to_string(kAxiomSweepCap)});
  }

  if (!w.empty()) {
    skipped.push_back({"self-dual", "applies only before vertex deletion"});
  } else if (m.ground().size() > SelfDualOptions{}.exhaustive_ground_limit) {
    skipped.push_back({"self-dual", "ground size " + std::to_string(m.ground().size()) +
                                        " exceeds the exhaustive cap of " +
                                        std::to_string(SelfDualOptions{}.exhaustive_ground_limit)});
  } else {
    verdicts.push_back(self_duality(m, label));
  }

  if (g.edge_count() <= kExhaustiveLabelingEdgeLimit) {
    verdicts.push_back(labeling_agreement(g, label));
  } else {
    skipped.push_back({"labeling-agreement", "graph has more than " +
                                                 std::to_string(kExhaustiveLabelingEdgeLimit) +
                                                 " edges"});
  }

  bool all_pass = true;
  for (const oracle::Verdict& v : verdicts) all_pass &= v.pass;

  if (json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const oracle::Verdict& v : verdicts) checks.push_back(oracle::to_json(v));
    nlohmann::json skips = nlohmann::json::array();
    for (const SkippedCheck& s : skipped) {
      skips.push_back({{"check", s.check}, {"reason", s.reason}});
    }
    nlohmann::json doc;
    doc["checks"] = std::move(checks);
    doc["skipped"] = std::move(skips);
    doc["pass"] = all_pass;
    emit_json(out, doc);
  } else {
    std::ostringstream text;
    for (const oracle::Verdict& v : verdicts) {
      text << (v.pass ? "pass" : "FAIL") << "  " << v.check << "  " << v.instance << "  ("
           << v.elapsed_ms << " ms)\n";
      if (v.witness) text << "      " << *v.witness << "\n";
    }
    for (const SkippedCheck& s : skipped) {
      text << "skip  " << s.check << "  (" << s.reason << ")\n";
    }
    text << (all_pass ? "all checks passed" : "verification failed") << "\n";
    out << text.str();
  }
  return all_pass ? 0 : 4;
}

} // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    const Multigraph g = load_graph(inv.graph_path);
    const std::vector<Vertex> w =
        inv.w_text ? parse_vertex_list(*inv.w_text) : std::vector<Vertex>{};
    const std::size_t limit = resolve_limit(inv);
    const bool json = inv.format == "json";

    if (inv.command == "info") {
      run_info(g, w, json, out);
    } else if (inv.command == "rank") {
      const TransversalMatroid m(g, w);
      const int r = inv.x_text ? m.rank(parse_ground_list(*inv.x_text)) : m.rank();
      if (json) emit_json(out, nlohmann::json{{"rank", r}});
      else out << r << "\n";
    } else if (inv.command == "independent" || inv.command == "basis") {
      if (!inv.x_text) {
        throw ParseError("command requires --x with a ground subset");
      }
      const TransversalMatroid m(g, w);
      const std::vector<GroundElement> x = parse_ground_list(*inv.x_text);
      const bool result = inv.command == "basis" ? m.is_basis(x) : m.is_independent(x);
      if (json) emit_json(out, nlohmann::json{{inv.command, result}});
      else out << (result ? "true" : "false") << "\n";
    } else if (inv.command == "count-bases") {
      const BigInt bases = count_bases(g, w, limit);
      if (json) emit_json(out, nlohmann::json{{"bases", bases.str()}});
      else out << bases.str() << "\n";
    } else if (inv.command == "classes") {
      run_classes(g, w, limit, json, out);
    } else if (inv.command == "table") {
      std::optional<Multigraph> alt;
      if (inv.alt_path) alt = load_graph(*inv.alt_path);
      const TableReport report = table_report(g, w, alt, limit);
      if (json) emit_json(out, to_json(report));
      else out << to_text(report);
    } else if (inv.command == "verify") {
      return run_verify(g, w, inv.graph_path, json, out);
    } else {
      throw ParseError("unknown command \"" + inv.command + "\"");
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace gtm::cli
