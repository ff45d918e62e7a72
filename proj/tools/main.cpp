#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"degree-slot matroids of multigraphs: ranks, bases, and orientation censuses"};
  app.require_subcommand(1);

  gtm::cli::Invocation inv;
  std::string w_text;
  std::string x_text;
  std::string alt_path;
  std::size_t limit = 0;

  struct SubcommandSpec {
    const char* name;
    const char* description;
    bool takes_x;
    bool takes_alt;
  };
  const SubcommandSpec specs[] = {
      {"info", "Graph and matroid summary", false, false},
      {"rank", "Rank of the ground set or of --x", true, false},
      {"independent", "Test whether --x is independent", true, false},
      {"basis", "Test whether --x is a basis", true, false},
      {"count-bases", "Count bases exactly via the orientation census", false, false},
      {"classes", "List orientation out-degree classes with multiplicities", false, false},
      {"table", "Full class table with weights (optionally against --alt)", false, true},
      {"verify", "Run the consistency battery on the instance", false, false},
  };

  std::vector<CLI::App*> subs;
  for (const SubcommandSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    sub->add_option("graph", inv.graph_path, "graph file (edge-list format)")->required();
    sub->add_option("--w", w_text, "vertices to delete, comma-separated 1-based ids");
    if (spec.takes_x) {
      sub->add_option("--x", x_text, "ground subset as comma-separated v:i tokens; \"\" is empty");
    }
    if (spec.takes_alt) {
      sub->add_option("--alt", alt_path, "second graph file for the alternate weight column");
    }
    sub->add_option("--format", inv.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--limit", limit, "enumeration cap (overrides GTM_LIMIT)");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    inv.command = specs[i].name;
    if (subs[i]->count("--w") > 0) inv.w_text = w_text;
    if (specs[i].takes_x && subs[i]->count("--x") > 0) inv.x_text = x_text;
    if (specs[i].takes_alt && subs[i]->count("--alt") > 0) inv.alt_path = alt_path;
    if (subs[i]->count("--limit") > 0) inv.limit = limit;
  }

  return gtm::cli::run(inv, std::cout, std::cerr);
}
