#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace gtm::cli {

// One parsed command line. Vertex lists and ground tokens stay as raw text
// here; run() parses them so contract violations map to its exit codes.
struct Invocation {
  std::string command;
  std::string graph_path;
  std::optional<std::string> w_text;   // comma-separated 1-based vertex ids
  std::optional<std::string> x_text;   // comma-separated "v:i" tokens; "" is the empty set
  std::optional<std::string> alt_path; // second graph for the alternate weight column
  std::string format = "text";         // "text" or "json"
  std::optional<std::size_t> limit;    // overrides GTM_LIMIT and the built-in cap
};

// Dispatches inv and writes the result document to out, diagnostics to err.
// Exit status: 0 success, 1 domain error, 2 parse error, 3 enumeration limit
// exceeded, 4 verification failure.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

} // namespace gtm::cli
