#include "surfcolor/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfcolor/engine.hpp"
#include "surfcolor/errors.hpp"
#include "surfcolor/generators.hpp"
#include "surfcolor/heawood.hpp"
#include "surfcolor/io.hpp"
#include "surfcolor/oracle.hpp"

namespace surfcolor::cli {

namespace {

std::string width_text(int w) { return w == kInfiniteDistance ? "inf" : std::to_string(w); }

struct Loaded {
  EmbeddedGraph graph;
  ListAssignment lists;
};

Loaded load(const std::string& graph_path, const std::string& lists_path) {
  Loaded out;
  out.graph = parse_graph(read_text_file(graph_path));
  out.lists = parse_lists(read_text_file(lists_path));
  return out;
}

// The subcommands share one result; each handler fills it in.
class Commands {
 public:
  explicit Commands(CommandResult& r) : r_(r) {}

  void info(const std::string& message) { r_.diagnostics.push_back({"info", message}); }

  void table(int max_genus) {
    if (max_genus < 1) throw PreconditionError("--max-genus must be at least 1");
    std::ostringstream out;
    out << "# eps\tH\te\tf\tmax_face\n";
    for (const auto& row : heawood_table(max_genus)) {
      out << row.genus << '\t' << row.heawood << '\t' << row.edge_count << '\t' << row.face_count << '\t'
          << row.max_face_size << '\n';
    }
    r_.payload = out.str();
  }

  void faces(const std::string& path) {
    const auto g = parse_graph(read_text_file(path));
    std::ostringstream out;
    out << "# index\tsize\tvertices\twalk\n";
    const auto all = trace_faces(g);
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << i << '\t' << all[i].size() << '\t' << all[i].vertex_region() << '\t';
      const auto corners = all[i].corner_vertices();
      for (std::size_t c = 0; c < corners.size(); ++c) out << (c ? " " : "") << corners[c];
      out << '\n';
    }
    r_.payload = out.str();
  }

  void genus(const std::string& path) {
    const auto g = parse_graph(read_text_file(path));
    std::ostringstream out;
    out << "declared\t" << g.declared_genus() << '\n';
    if (is_connected(g)) {
      out << "derived\t" << derived_genus(g) << '\n';
      out << "two_cell\t" << (is_two_cell(g) ? "yes" : "no") << '\n';
    } else {
      out << "components\t" << connected_components(g).size() << '\n';
    }
    r_.payload = out.str();
  }

  void edge_width_cmd(const std::string& path, std::size_t max_length) {
    r_.payload = width_text(edge_width(parse_graph(read_text_file(path)), max_length)) + "\n";
  }

  void fixture(int n) { r_.payload = emit_graph(complete_graph_fixture(n).graph); }

  void sharpness(int eps, int path_length, bool exclude) {
    const auto inst = sharpness_example(eps, {.path_length = path_length, .exclude_pendant_color = exclude});
    r_.payload = emit_graph(inst.graph) + emit_lists(inst.lists);
  }

  void gen(int eps, int budget, std::uint64_t seed) {
    const auto inst = random_theorem_instance(eps, budget, seed);
    r_.payload = emit_graph(inst.graph) + emit_lists(inst.lists);
  }

  void extend(const std::string& graph_path, const std::string& lists_path, const std::string& trace_path,
              bool oracle_check, bool wide) {
    const auto in = load(graph_path, lists_path);
    const auto result = wide ? extend_wide(in.graph, in.lists) : extend_main(in.graph, in.lists);
    if (oracle_check) {
      const auto report = verify_coloring(in.graph, in.lists, result.coloring);
      if (!report.valid()) throw InternalError("oracle check: " + report.describe());
      if (in.graph.vertex_count() <= OracleOptions{}.vertex_cap) {
        if (!brute_force_color(in.graph, in.lists)) throw InternalError("oracle check: exhaustive search finds no coloring");
        info("oracle check passed");
      } else {
        info("oracle check verified the coloring; exhaustive search skipped above " +
             std::to_string(OracleOptions{}.vertex_cap) + " vertices");
      }
    }
    if (!trace_path.empty()) write_text_file(trace_path, result.trace.to_json() + "\n");
    info(std::to_string(result.trace.steps.size()) + " trace steps");
    r_.payload = emit_coloring(result.coloring);
  }

  void solve(const std::string& graph_path, const std::string& lists_path, bool oracle) {
    if (!oracle) throw PreconditionError("solve needs --oracle");
    const auto in = load(graph_path, lists_path);
    const auto c = brute_force_color(in.graph, in.lists);
    if (!c) {
      r_.status = Status::kUnsat;
      info("no list coloring exists");
      return;
    }
    r_.payload = emit_coloring(*c);
  }

  void verify(const std::string& graph_path, const std::string& lists_path, const std::string& coloring_path) {
    const auto in = load(graph_path, lists_path);
    const auto report = verify_coloring(in.graph, in.lists, parse_coloring(read_text_file(coloring_path)));
    if (report.valid()) {
      r_.payload = "valid\n";
    } else {
      r_.status = Status::kUnsat;
      r_.payload = "invalid\n";
      r_.diagnostics.push_back({"error", report.describe()});
    }
  }

  void reduce_faces(const std::string& graph_path, const std::string& lists_path, const std::vector<std::size_t>& indices,
                    bool solve_it) {
    const auto in = load(graph_path, lists_path);
    const auto all = trace_faces(in.graph);
    std::vector<Face> chosen;
    for (std::size_t i : indices) {
      if (i >= all.size()) throw PreconditionError("face index " + std::to_string(i) + " out of range");
      chosen.push_back(all[i]);
    }
    const auto red = reduce_face_lists(in.graph, chosen, in.lists);
    std::ostringstream apexes;
    for (VertexId a : red.apexes) apexes << ' ' << a;
    info("apexes:" + apexes.str() + "; shared color " + std::to_string(red.alpha));
    if (solve_it) {
      r_.payload = emit_coloring(restrict_to_original(red, extend_main(red.graph, red.lists).coloring));
    } else {
      r_.payload = emit_graph(red.graph) + emit_lists(red.lists);
    }
  }

 private:
  CommandResult& r_;
};

}  // namespace

std::string CommandResult::render_diagnostics() const {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    if (json) {
      out += nlohmann::json{{"level", d.level}, {"message", d.message}}.dump() + "\n";
    } else {
      out += d.level + ": " + d.message + "\n";
    }
  }
  return out;
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult r;
  r.json = std::find(args.begin(), args.end(), "--json") != args.end();
  Commands cmd(r);

  CLI::App app{"Graphs on surfaces and precoloring extension", "surfcolor"};
  app.require_subcommand(1);
  app.add_flag("--json", r.json, "Diagnostics as JSON lines");
  app.add_option("-o,--output", r.output_path, "Write the payload to a file");

  int max_genus = 24;
  app.add_subcommand("table", "Heawood parameters per Euler genus (TSV)")->add_option("--max-genus", max_genus);

  std::string graph;
  std::string lists;
  std::string coloring;
  auto* faces = app.add_subcommand("faces", "Facial walks (TSV)");
  faces->add_option("graph", graph)->required();
  auto* genus = app.add_subcommand("genus", "Declared and derived Euler genus");
  genus->add_option("graph", graph)->required();
  std::size_t max_length = 0;
  auto* width = app.add_subcommand("edge-width", "Shortest noncontractible cycle");
  width->add_option("graph", graph)->required();
  width->add_option("--max-length", max_length, "Ignore longer cycles (0: no limit)");

  int n = 0;
  app.add_subcommand("fixture", "Shipped embedding of K_n")->add_option("n", n)->required();
  int eps = 0;
  int path_length = 1;
  bool exclude = false;
  auto* sharp = app.add_subcommand("sharpness", "Clique with precolored pendants");
  sharp->add_option("eps", eps)->required();
  sharp->add_option("--path-length", path_length);
  sharp->add_flag("--exclude-pendant-color", exclude);
  int budget = 14;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Random instance satisfying the extension hypotheses");
  gen->add_option("--genus", eps)->required();
  gen->add_option("--budget", budget);
  gen->add_option("--seed", seed);

  std::string trace_path;
  bool oracle_check = false;
  bool wide = false;
  auto* extend = app.add_subcommand("extend", "Extend the precoloring to a list coloring");
  extend->add_option("graph", graph)->required();
  extend->add_option("lists", lists)->required();
  extend->add_option("--trace", trace_path, "Write the proof trace as JSON");
  extend->add_flag("--oracle-check", oracle_check, "Confirm the result with the exhaustive oracle");
  extend->add_flag("--wide", wide, "Edge-width >= 4 regime with distance >= 3");

  bool oracle = false;
  auto* solve = app.add_subcommand("solve", "Exhaustive list coloring");
  solve->add_option("graph", graph)->required();
  solve->add_option("lists", lists)->required();
  solve->add_flag("--oracle", oracle)->required();

  auto* verify = app.add_subcommand("verify", "Check a coloring against graph and lists");
  verify->add_option("graph", graph)->required();
  verify->add_option("lists", lists)->required();
  verify->add_option("coloring", coloring)->required();

  std::vector<std::size_t> face_indices;
  bool solve_reduced = false;
  auto* reduce = app.add_subcommand("reduce-faces", "Add apexes to faces with one color short");
  reduce->add_option("graph", graph)->required();
  reduce->add_option("lists", lists)->required();
  reduce->add_option("--face", face_indices, "Face index as listed by 'faces'")->required();
  reduce->add_flag("--solve", solve_reduced, "Solve and print a coloring of the original graph");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_flag("--json", r.json, "Diagnostics as JSON lines");
    sub->add_option("-o,--output", r.output_path, "Write the payload to a file");
  }

  try {
    if (!args.empty() && !args.front().starts_with('-')) {
      bool known = false;
      for (const CLI::App* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
      if (!known) throw PreconditionError("unknown subcommand '" + args.front() + "'");
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "table") cmd.table(max_genus);
    else if (name == "faces") cmd.faces(graph);
    else if (name == "genus") cmd.genus(graph);
    else if (name == "edge-width") cmd.edge_width_cmd(graph, max_length);
    else if (name == "fixture") cmd.fixture(n);
    else if (name == "sharpness") cmd.sharpness(eps, path_length, exclude);
    else if (name == "gen") cmd.gen(eps, budget, seed);
    else if (name == "extend") cmd.extend(graph, lists, trace_path, oracle_check, wide);
    else if (name == "solve") cmd.solve(graph, lists, oracle);
    else if (name == "verify") cmd.verify(graph, lists, coloring);
    else if (name == "reduce-faces") cmd.reduce_faces(graph, lists, face_indices, solve_reduced);
  } catch (const CLI::CallForHelp&) {
    r.payload = app.help();
  } catch (const CLI::CallForAllHelp&) {
    r.payload = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    r.status = Status::kError;
    r.diagnostics.push_back({"error", e.what()});
  } catch (const std::exception& e) {
    r.status = Status::kError;
    r.payload.clear();
    r.diagnostics.push_back({"error", e.what()});
  }
  return r;
}

}  // namespace surfcolor::cli
