#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "surfcolor/cli.hpp"
#include "surfcolor/generators.hpp"
#include "surfcolor/heawood.hpp"
#include "surfcolor/io.hpp"
#include "surfcolor/oracle.hpp"

using namespace surfcolor;
using cli::run;
using cli::Status;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("surfcolor_cli_" + name)).string();
}

std::string fixture_path(const std::string& name) { return std::string(SURFCOLOR_FIXTURE_DIR) + "/" + name + ".graph"; }

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("table") {
  const auto r = run({"table", "--max-genus", "24"});
  REQUIRE(r.status == Status::kOk);
  const auto rows = data_lines(r.payload);
  REQUIRE(rows.size() == 24);
  const auto expected = heawood_table(24);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = expected[i];
    CHECK(rows[i] == std::to_string(e.genus) + "\t" + std::to_string(e.heawood) + "\t" + std::to_string(e.edge_count) +
                         "\t" + std::to_string(e.face_count) + "\t" + std::to_string(e.max_face_size));
  }
  CHECK(rows[1] == "2\t7\t21\t14\t3");
}

TEST_CASE("graph inspection") {
  const auto faces = run({"faces", fixture_path("k7_torus")});
  REQUIRE(faces.status == Status::kOk);
  CHECK(data_lines(faces.payload).size() == 14);
  const auto genus = run({"genus", fixture_path("k6_projective")});
  CHECK(genus.payload == "declared\t1\nderived\t1\ntwo_cell\tyes\n");
  CHECK(run({"edge-width", fixture_path("k7_torus")}).payload == "3\n");
}

TEST_CASE("emitted artifacts re-parse") {
  const auto fx = run({"fixture", "7"});
  REQUIRE(fx.status == Status::kOk);
  CHECK(parse_graph(fx.payload) == complete_graph_fixture(7).graph);
  CHECK(run({"fixture", "8"}).status == Status::kError);

  const auto gen1 = run({"gen", "--genus", "1", "--budget", "12", "--seed", "9"});
  const auto gen2 = run({"gen", "--genus", "1", "--budget", "12", "--seed", "9"});
  REQUIRE(gen1.status == Status::kOk);
  CHECK(gen1.payload == gen2.payload);
  const auto inst = random_theorem_instance(1, 12, 9);
  CHECK(parse_graph(gen1.payload) == inst.graph);
  CHECK(parse_lists(gen1.payload) == inst.lists);
}

TEST_CASE("sharpness is UNSAT and extend refuses it") {
  const auto sharp = run({"sharpness", "1"});
  REQUIRE(sharp.status == Status::kOk);
  const auto path = temp_path("sharp.txt");
  write_text_file(path, sharp.payload);
  CHECK(run({"solve", "--oracle", path, path}).exit_code() == 1);
  const auto refused = run({"extend", path, path, "--json"});
  CHECK(refused.exit_code() == 2);
  REQUIRE(refused.diagnostics.size() == 1);
  CHECK(refused.diagnostics[0].message.find("distance 3") != std::string::npos);
  const auto line = nlohmann::json::parse(refused.render_diagnostics());
  CHECK(line.at("level") == "error");

  const auto relaxed = run({"sharpness", "1", "--exclude-pendant-color"});
  write_text_file(path, relaxed.payload);
  CHECK(run({"solve", "--oracle", path, path}).status == Status::kOk);
}

TEST_CASE("extend with oracle check, trace and verify") {
  const auto lists_path = temp_path("k7_lists.txt");
  std::string lists;
  for (int v = 0; v < 7; ++v) lists += "list " + std::to_string(v) + ": 1 2 3 4 5 6 7\n";
  lists += "list 0: 4\n";
  write_text_file(lists_path, lists);
  CHECK(run({"extend", fixture_path("k7_torus"), lists_path}).status == Status::kError);  // duplicate list line

  lists = "list 0: 4\n";
  for (int v = 1; v < 7; ++v) lists += "list " + std::to_string(v) + ": 1 2 3 4 5 6 7\n";
  write_text_file(lists_path, lists);
  const auto trace_path = temp_path("trace.json");
  const auto r = run({"extend", fixture_path("k7_torus"), lists_path, "--oracle-check", "--trace", trace_path});
  REQUIRE(r.status == Status::kOk);
  const auto c = parse_coloring(r.payload);
  CHECK(c.at(0) == 4);
  const auto trace = nlohmann::json::parse(read_text_file(trace_path));
  CHECK(trace.at("steps").size() >= 1);
  CHECK(trace.at("steps")[0].contains("genus_before"));

  const auto coloring_path = temp_path("coloring.txt");
  write_text_file(coloring_path, r.payload);
  CHECK(run({"verify", fixture_path("k7_torus"), lists_path, coloring_path}).payload == "valid\n");
  write_text_file(coloring_path, "color 0: 4\ncolor 1: 4\ncolor 2: 1\ncolor 3: 2\ncolor 4: 3\ncolor 5: 5\ncolor 6: 6\n");
  const auto bad = run({"verify", fixture_path("k7_torus"), lists_path, coloring_path});
  CHECK(bad.exit_code() == 1);
  CHECK(bad.diagnostics.at(0).message.find("edge 0-1") != std::string::npos);
}

TEST_CASE("reduce-faces") {
  const auto lists_path = temp_path("k7_short.txt");
  const auto faces = trace_faces(complete_graph_fixture(7).graph);
  std::string lists;
  for (int v = 0; v < 7; ++v) {
    lists += "list " + std::to_string(v) + ":";
    const int size = faces[0].contains_vertex(v) ? 6 : 7;
    for (int c = 1; c <= size; ++c) lists += " " + std::to_string(c);
    lists += "\n";
  }
  write_text_file(lists_path, lists);
  const auto r = run({"reduce-faces", fixture_path("k7_torus"), lists_path, "--face", "0", "--solve"});
  REQUIRE(r.status == Status::kOk);
  const auto c = parse_coloring(r.payload);
  CHECK(verify_coloring(complete_graph_fixture(7).graph, parse_lists(lists), c).valid());
  const auto reduced = run({"reduce-faces", fixture_path("k7_torus"), lists_path, "--face", "0"});
  CHECK(parse_graph(reduced.payload).vertex_count() == 8);
}

TEST_CASE("errors") {
  const auto unknown = run({"bogus"});
  CHECK(unknown.exit_code() == 2);
  CHECK(unknown.diagnostics.at(0).message.find("bogus") != std::string::npos);
  CHECK(run({}).exit_code() == 2);
  const auto bad_path = temp_path("bad.graph");
  write_text_file(bad_path, "genus 1\nvertex 0: 1\nvertex 1: x\n");
  const auto bad = run({"genus", bad_path});
  CHECK(bad.exit_code() == 2);
  CHECK(bad.diagnostics.at(0).message.find("line 3, column 11") != std::string::npos);
  CHECK(run({"genus", temp_path("missing.graph")}).exit_code() == 2);
  CHECK(run({"solve", fixture_path("k7_torus"), fixture_path("k7_torus")}).exit_code() == 2);
  CHECK(run({"table", "--help"}).status == Status::kOk);
}
