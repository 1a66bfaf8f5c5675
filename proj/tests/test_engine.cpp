#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "surfcolor/engine.hpp"
#include "surfcolor/errors.hpp"
#include "surfcolor/generators.hpp"
#include "surfcolor/heawood.hpp"
#include "surfcolor/oracle.hpp"

using namespace surfcolor;
using testsupport::load_fixture;

namespace {

std::vector<Color> sample(std::mt19937& rng, int palette, int size) {
  std::vector<Color> all(static_cast<std::size_t>(palette));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  return all;
}

std::vector<Color> range(int lo, int hi) {
  std::vector<Color> out;
  for (int c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

EmbeddedGraph complete_graph(int n) {
  EmbeddedGraph::Rotation rot;
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (w != v) rot[v].push_back(w);
    }
  }
  return EmbeddedGraph::two_cell(rot);
}

// A plane wheel: rim 0..k-1, hub k.
EmbeddedGraph wheel(int k) {
  EmbeddedGraph::Rotation rot;
  for (int v = 0; v < k; ++v) rot[v] = {(v + k - 1) % k, k, (v + 1) % k};
  for (int v = k - 1; v >= 0; --v) rot[k].push_back(v);
  return EmbeddedGraph(0, rot);
}

// Adds `count` vertices, each inside a random face and joined to all its corners.
EmbeddedGraph stack_vertices(EmbeddedGraph g, int count, std::mt19937& rng) {
  for (int i = 0; i < count; ++i) {
    const auto faces = trace_faces(g);
    const Face& f = faces[rng() % faces.size()];
    std::vector<std::size_t> corners;
    std::set<VertexId> seen;
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (seen.insert(f.walk()[c].from).second) corners.push_back(c);
    }
    g = add_vertex_in_face(g, f, corners, g.max_vertex_id() + 1);
  }
  return g;
}

// The patch graph with boundary copies pinned to their colors, for the oracle.
ListAssignment pinned_patch_lists(const PatchInstance& inst) {
  std::map<VertexId, std::vector<Color>> lists = inst.lists.lists();
  for (const auto& [copy, host] : inst.patch.attachment) lists[copy] = {inst.boundary_coloring.at(host)};
  return ListAssignment(lists);
}

Coloring patch_coloring(const PatchInstance& inst, const Coloring& interior) {
  Coloring c = interior;
  for (const auto& [copy, host] : inst.patch.attachment) c[copy] = inst.boundary_coloring.at(host);
  return c;
}

bool has_step(const ExtensionTrace& t, const std::string& name) {
  return std::any_of(t.steps.begin(), t.steps.end(), [&](const TraceStep& s) { return s.name == name; });
}

}  // namespace

TEST_CASE("excise") {
  const auto g = complete_graph(4);
  const ListAssignment la({{0, {1}}, {1, {1, 2, 3}}, {2, {2, 3}}, {3, {4}}});
  const auto ex = excise(g, la, 0);
  CHECK_FALSE(ex.graph.contains(0));
  CHECK(ex.graph.vertex_count() == 3);
  CHECK(ex.lists.list(1) == std::vector<Color>{2, 3});
  CHECK(ex.lists.list(2) == std::vector<Color>{2, 3});
  CHECK(ex.lists.list(3) == std::vector<Color>{4});
  CHECK_FALSE(ex.lists.has(0));
  CHECK_THROWS_AS((void)excise(g, la, 1), PreconditionError);

  const EmbeddedGraph lone(0, {{0, {}}, {1, {2}}, {2, {1}}});
  const ListAssignment l2({{0, {7}}, {1, {7, 8}}, {2, {7, 8}}});
  const auto ex2 = excise(lone, l2, 0);
  CHECK(ex2.lists.list(1) == l2.list(1));
  CHECK(ex2.lists.list(2) == l2.list(2));
}

TEST_CASE("excision never shrinks a list by more than one") {
  std::mt19937 rng(17);
  const auto g = stack_vertices(load_fixture("k6_projective"), 6, rng);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : g.vertices()) lists[v] = sample(rng, 8, 6);
  lists[0] = {lists[1].front()};
  lists[9] = {lists[1].back()};
  const ListAssignment la(lists);
  for (VertexId p : {0, 9}) {
    const auto ex = excise(g, la, p);
    for (VertexId v : ex.graph.vertices()) {
      CHECK(ex.lists.size_of(v) + 1 >= la.size_of(v));
      if (la.is_precolored(v)) CHECK(ex.lists.list(v) == la.list(v));
    }
  }
}

TEST_CASE("clique coloring") {
  const auto k3 = complete_graph(3);
  const VertexId tri[] = {0, 1, 2};
  const ListAssignment la({{0, {5}}, {1, {1, 2}}, {2, {1, 2, 3}}});
  CHECK(color_clique_one_fixed(k3, tri, la) == Coloring{{0, 5}, {1, 1}, {2, 2}});

  const auto k7 = complete_graph(7);
  std::vector<VertexId> all(7);
  std::iota(all.begin(), all.end(), 0);
  std::map<VertexId, std::vector<Color>> same;
  for (VertexId v : all) same[v] = range(1, 7);
  const auto c = color_clique_one_fixed(k7, all, ListAssignment(same));
  std::set<Color> used;
  for (const auto& [v, col] : c) used.insert(col);
  CHECK(used.size() == 7);

  // One 1-list whose color every other list shares.
  const auto k6 = complete_graph(6);
  std::vector<VertexId> six(6);
  std::iota(six.begin(), six.end(), 0);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<VertexId, std::vector<Color>> lists;
    const int fixed = static_cast<int>(rng() % 6);
    for (VertexId v : six) {
      auto l = sample(rng, 9, v == 1 ? 6 : 5 + static_cast<int>(rng() % 2));
      if (std::find(l.begin(), l.end(), 9) == l.end()) l.back() = 9;
      lists[v] = l;
    }
    lists[fixed] = {9};
    if (fixed == 1) lists[2] = range(1, 6);
    const ListAssignment l(lists);
    const auto col = color_clique_one_fixed(k6, six, l);
    CHECK(verify_coloring(k6, l, col).valid());
    CHECK(brute_force_color(k6, l).has_value());
  }

  std::map<VertexId, std::vector<Color>> two_fixed = same;
  two_fixed[0] = {1};
  two_fixed[1] = {2};
  CHECK_THROWS_AS((void)color_clique_one_fixed(k7, all, ListAssignment(two_fixed)), PreconditionError);
  std::map<VertexId, std::vector<Color>> all_short;
  for (VertexId v : all) all_short[v] = range(1, 6);
  CHECK_THROWS_AS((void)color_clique_one_fixed(k7, all, ListAssignment(all_short)), PreconditionError);
}

TEST_CASE("clique coloring with a precolored neighbour outside") {
  // K6 plus a vertex adjacent to five of its vertices.
  EmbeddedGraph::Rotation rot = complete_graph(6).rotation_map();
  for (VertexId v = 0; v < 5; ++v) {
    rot[v].push_back(6);
    rot[6].push_back(v);
  }
  const auto g = EmbeddedGraph::two_cell(rot);
  std::vector<VertexId> six(6);
  std::iota(six.begin(), six.end(), 0);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : six) lists[v] = range(1, 6);
  lists[6] = {3};
  const ListAssignment la(lists);
  const auto c = color_clique_one_fixed(g, six, la, 6);
  CHECK(c.at(6) == 3);
  CHECK(c.at(5) == 3);
  CHECK(verify_coloring(g, la, c).valid());
}

TEST_CASE("DK coloring: shared color on the missing edge") {
  const auto dk = dk_graph(7);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : dk.graph.vertices()) lists[v] = range(1, 7);
  lists[dk.x] = range(1, 6);
  lists[dk.y] = range(3, 8);
  const ListAssignment la(lists);
  const auto c = color_dk(dk, la);
  CHECK(c.at(dk.x) == c.at(dk.y));
  CHECK(verify_coloring(dk.graph, la, c).valid());
}

TEST_CASE("DK coloring: one fixed vertex") {
  const auto dk = dk_graph(7);
  for (VertexId fixed : dk.graph.vertices()) {
    std::map<VertexId, std::vector<Color>> lists;
    for (VertexId v : dk.graph.vertices()) lists[v] = {1, 2, 3, 4, 5, 6, 9};
    lists[fixed] = {9};
    const ListAssignment la(lists);
    const auto c = color_dk(dk, la);
    CHECK(c.at(fixed) == 9);
    CHECK(verify_coloring(dk.graph, la, c).valid());
    CHECK(brute_force_color(dk.graph, la).has_value());
  }
}

TEST_CASE("DK coloring: disjoint lists force the recoloring swap") {
  const auto dk = dk_graph(7);
  // L(x) = {1..6}, L(y) = {11..16}; every clique vertex gets L(y) + c_x.
  // The greedy pass colors x with 1, so W uses exactly L(y) and no vertex of
  // W has a color outside L(y) + {1}: x must move.
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : dk.common()) lists[v] = {1, 11, 12, 13, 14, 15, 16};
  lists[dk.x] = range(1, 6);
  lists[dk.y] = range(11, 16);
  const ListAssignment la(lists);
  const auto c = color_dk(dk, la);
  CHECK(verify_coloring(dk.graph, la, c).valid());
  CHECK(c.at(dk.x) != 1);

  // A clique vertex with an escape color takes the simpler swap.
  lists[0] = {1, 11, 12, 13, 14, 15, 20};
  const ListAssignment la2(lists);
  CHECK(verify_coloring(dk.graph, la2, color_dk(dk, la2)).valid());
}

TEST_CASE("DK coloring on random lists agrees with the oracle") {
  std::mt19937 rng(23);
  for (int n = 7; n <= 9; ++n) {
    const auto dk = dk_graph(n);
    const auto vs = dk.graph.vertices();
    for (int trial = 0; trial < 150; ++trial) {
      std::map<VertexId, std::vector<Color>> lists;
      const int palette = n + 1 + static_cast<int>(rng() % 4);
      for (VertexId v : vs) lists[v] = sample(rng, palette, n);
      if (trial % 3 == 0) {
        lists[vs[rng() % vs.size()]] = {static_cast<Color>(1 + rng() % palette)};
      } else {
        auto order = vs;
        std::shuffle(order.begin(), order.end(), rng);
        const int shorts = static_cast<int>(rng() % 7);
        for (int i = 0; i < shorts; ++i) lists[order[static_cast<std::size_t>(i)]].pop_back();
        if (trial % 3 == 2) {
          lists[dk.x] = sample(rng, palette, n - 1);
          lists[dk.y].clear();
          for (Color c = 1; c <= 2 * palette && lists[dk.y].size() < static_cast<std::size_t>(n - 1); ++c) {
            if (std::find(lists[dk.x].begin(), lists[dk.x].end(), c) == lists[dk.x].end()) lists[dk.y].push_back(c);
          }
        }
        std::size_t short_count = 0;
        for (VertexId v : vs) short_count += lists[v].size() + 1 == static_cast<std::size_t>(n);
        if (short_count > 6) continue;
      }
      const ListAssignment la(lists);
      const auto c = color_dk(dk, la);
      REQUIRE(verify_coloring(dk.graph, la, c).valid());
      CHECK(brute_force_color(dk.graph, la).has_value());
    }
  }
}

TEST_CASE("DK coloring rejects lists outside its hypotheses") {
  const auto dk = dk_graph(7);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : dk.graph.vertices()) lists[v] = range(1, 6);
  CHECK_THROWS_AS((void)color_dk(dk, ListAssignment(lists)), PreconditionError);
  const auto small = dk_graph(6);
  std::map<VertexId, std::vector<Color>> l6;
  for (VertexId v : small.graph.vertices()) l6[v] = range(1, 6);
  l6[0] = range(1, 5);
  CHECK_THROWS_AS((void)color_dk(small, ListAssignment(l6)), PreconditionError);
}

TEST_CASE("planar leaf solver") {
  // Empty interior: the boundary coloring comes back.
  const EmbeddedGraph tri(0, {{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}});
  const VertexId cyc3[] = {0, 1, 2};
  const Coloring bc{{0, 4}, {1, 5}, {2, 6}};
  CHECK(leaf_planar_solve(tri, ListAssignment(), cyc3, bc) == bc);

  // A 6-wheel whose hub has six colors, not all on the rim.
  const auto w6 = wheel(6);
  const VertexId cyc6[] = {0, 1, 2, 3, 4, 5};
  Coloring rim;
  for (VertexId v = 0; v < 6; ++v) rim[v] = v + 1;
  const ListAssignment hub({{6, {1, 2, 3, 4, 5, 9}}});
  CHECK(leaf_planar_solve(w6, hub, cyc6, rim).at(6) == 9);
  const ListAssignment trapped({{6, {1, 2, 3, 4, 5, 6}}});
  CHECK_THROWS_AS((void)leaf_planar_solve(w6, trapped, cyc6, rim), PreconditionError);

  // Short lists, long cycles and non-facial cycles are refused.
  const ListAssignment four({{6, {1, 2, 3, 9}}});
  CHECK_THROWS_AS((void)leaf_planar_solve(w6, four, cyc6, rim), PreconditionError);
  const VertexId chord[] = {0, 1, 6};
  CHECK_THROWS_AS((void)leaf_planar_solve(w6, hub, chord, {{0, 1}, {1, 2}, {6, 3}}), PreconditionError);
  CHECK_THROWS_AS((void)leaf_planar_solve(load_fixture("k6_projective"), ListAssignment()), PreconditionError);
}

TEST_CASE("planar leaf solver on random triangulations") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int extra = trial < 30 ? 14 : 47;
    const auto g = stack_vertices(EmbeddedGraph(0, {{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}}), extra, rng);
    std::map<VertexId, std::vector<Color>> lists;
    for (VertexId v : g.vertices()) lists[v] = sample(rng, 7, 5);
    const ListAssignment la(lists);
    const auto c = leaf_planar_solve(g, la);
    REQUIRE(verify_coloring(g, la, c).valid());
    if (g.vertex_count() <= 20) CHECK(brute_force_color(g, la).has_value());
  }
}

TEST_CASE("face extension in each regime agrees with the oracle") {
  struct Regime {
    int k;
    int l;
    int interior;
  };
  const Regime regimes[] = {{3, 6, 8}, {4, 6, 7}, {5, 7, 7}, {6, 8, 7}, {6, 7, 6}, {7, 9, 6}, {9, 10, 5}, {9, 11, 5}, {10, 11, 4}};
  std::uint64_t seed = 1;
  for (const Regime& r : regimes) {
    CAPTURE(r.k);
    CAPTURE(r.l);
    for (int trial = 0; trial < 25; ++trial) {
      const auto inst = random_patch_instance(r.k, r.l, r.interior, seed++);
      const auto ext = extend_into_face(inst.patch, inst.boundary_coloring, inst.lists);
      REQUIRE(ext.colored());
      const auto interior = inst.patch.interior_vertices();
      CHECK(ext.coloring.size() == interior.size());
      const auto pinned = pinned_patch_lists(inst);
      REQUIRE(verify_coloring(inst.patch.patch_graph, pinned, patch_coloring(inst, ext.coloring)).valid());
      CHECK(brute_force_color(inst.patch.patch_graph, pinned).has_value());
    }
  }
}

TEST_CASE("face extension near the exceptional configuration") {
  // Host: a 6-cycle with a hub adjacent to all six.
  const auto w6 = wheel(6);
  std::vector<Edge> rim;
  for (VertexId v = 0; v < 6; ++v) rim.push_back(Edge::of(v, (v + 1) % 6));
  const auto frame = w6.edge_subgraph(rim);
  std::optional<FacePatch> patch;
  for (const FrameRegion& r : locate_regions(frame, w6)) {
    if (!r.interior.empty()) patch = duplicate_boundary(r.face, frame, w6);
  }
  REQUIRE(patch);
  Coloring bc;
  for (VertexId v = 0; v < 6; ++v) bc[v] = v + 1;
  const auto ok = extend_into_face(*patch, bc, ListAssignment({{6, {1, 2, 3, 4, 5, 6, 7}}}));
  REQUIRE(ok.colored());
  CHECK(ok.coloring.at(6) == 7);

  // Every color of the hub already sits on the boundary.
  const auto blocked = extend_into_face(*patch, bc, ListAssignment({{6, {1, 2, 3, 4, 5, 6}}}));
  CHECK_FALSE(blocked.colored());
  CHECK(blocked.exceptional_vertex == 6);
}

TEST_CASE("face extension rejects bad input") {
  const auto inst = random_patch_instance(4, 6, 3, 5);
  auto bc = inst.boundary_coloring;
  bc[1] = bc[0];
  CHECK_THROWS_AS((void)extend_into_face(inst.patch, bc, inst.lists), PreconditionError);
  auto partial = inst.boundary_coloring;
  partial.erase(2);
  CHECK_THROWS_AS((void)extend_into_face(inst.patch, partial, inst.lists), PreconditionError);
  // l = 5 on a 4-face is outside every regime.
  const auto low = random_patch_instance(4, 5, 3, 5);
  CHECK_THROWS_AS((void)extend_into_face(low.patch, low.boundary_coloring, low.lists), PreconditionError);
  // k = 8 with l = 9 is outside every regime.
  const auto eight = random_patch_instance(8, 9, 3, 5);
  CHECK_THROWS_AS((void)extend_into_face(eight.patch, eight.boundary_coloring, eight.lists), PreconditionError);
}

TEST_CASE("face extension reads only the patch") {
  const auto inst = random_patch_instance(5, 7, 6, 77);
  auto lists = inst.lists.lists();
  lists[1000] = {1, 2};
  lists[1001] = {3};
  Coloring bc = inst.boundary_coloring;
  bc[1000] = 1;
  const auto a = extend_into_face(inst.patch, inst.boundary_coloring, inst.lists);
  const auto b = extend_into_face(inst.patch, bc, ListAssignment(lists));
  CHECK(a.coloring == b.coloring);
}

TEST_CASE("surgery") {
  const auto k7 = load_fixture("k7_torus").with_declared_genus(3);
  const auto s = surgery_to_two_cell(k7);
  CHECK(s.graph.declared_genus() == 2);
  CHECK(is_two_cell(s.graph));
  CHECK(s.report.genus_before == 3);
  CHECK(s.report.genus_after == 2);
  CHECK(s.report.n2 == 1);
  CHECK(s.report.n1 == 0);
  CHECK(s.report.derived_faces.size() <= 1);
  CHECK(s.report.cuts.size() == 1);
  CHECK(s.report.cuts[0].kind == CutKind::kNonseparatingOneSided);

  const auto k6 = surgery_to_two_cell(load_fixture("k6_projective").with_declared_genus(2));
  CHECK(k6.graph.declared_genus() == 1);
  CHECK(k6.report.n2 == 1);

  CHECK_THROWS_AS((void)surgery_to_two_cell(load_fixture("k7_torus")), PreconditionError);

  for (int extra = 1; extra <= 6; ++extra) {
    for (const char* name : {"k5_projective", "k6_projective", "k7_torus"}) {
      const auto g = load_fixture(name);
      const int eps = g.declared_genus() + extra;
      const auto r = surgery_to_two_cell(g.with_declared_genus(eps)).report;
      CHECK(r.genus_after < r.genus_before);
      CHECK(r.derived_faces.size() <= static_cast<std::size_t>(r.n2));
      int drop = 0;
      for (const auto& cut : r.cuts) drop += cut.genus_drop;
      CHECK(drop == r.n2);
      CHECK(r.n1 + r.n2 == eps - inverse_genus(heawood_number(eps)));
    }
  }
}

TEST_CASE("extend_main on K7 with a vertex in every face") {
  const auto k7 = load_fixture("k7_torus");
  auto g = k7;
  for (const Face& f : trace_faces(k7)) {
    const std::size_t corners[] = {0, 1, 2};
    g = add_vertex_in_face(g, f, corners, g.max_vertex_id() + 1);
  }
  REQUIRE(g.vertex_count() == 21);
  std::mt19937 rng(4);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : g.vertices()) lists[v] = sample(rng, 9, 7);
  const ListAssignment la(lists);
  const auto r = extend_main(g, la);
  CHECK(verify_coloring(g, la, r.coloring).valid());
  CHECK(brute_force_color(g, la).has_value());
  CHECK(r.trace.replay() == r.coloring);
  CHECK(has_step(r.trace, "face-extend"));
  CHECK(has_step(r.trace, "clique-color"));
  const auto json = nlohmann::json::parse(r.trace.to_json());
  CHECK(json.at("steps").size() == r.trace.steps.size());
}

TEST_CASE("extend_main on random instances agrees with the oracle") {
  for (int eps = 1; eps <= 2; ++eps) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto inst = random_theorem_instance(eps, 14, seed);
      const auto r = extend_main(inst.graph, inst.lists);
      REQUIRE(verify_coloring(inst.graph, inst.lists, r.coloring).valid());
      CHECK(brute_force_color(inst.graph, inst.lists).has_value());
      CHECK(r.trace.replay() == r.coloring);
      for (VertexId p : inst.lists.precolored()) CHECK(r.coloring.at(p) == inst.lists.list(p).front());
    }
  }
}

TEST_CASE("extend_main with longer pendant paths") {
  for (int eps = 1; eps <= 2; ++eps) {
    const auto inst = sharpness_example(eps, {.path_length = 2});
    CHECK(min_pairwise_distance(inst.graph, inst.lists.precolored()) == 5);
    const auto r = extend_main(inst.graph, inst.lists);
    CHECK(verify_coloring(inst.graph, inst.lists, r.coloring).valid());
    CHECK(brute_force_color(inst.graph, inst.lists).has_value());
  }
}

TEST_CASE("extend_main surgery and peeling") {
  // K7 declared on Euler genus 3: the clique survives and surgery runs first.
  const auto k7 = load_fixture("k7_torus");
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v = 0; v < 7; ++v) lists[v] = range(1, 7);
  lists[3] = {5};
  const auto r = extend_main(k7.with_declared_genus(3), ListAssignment(lists));
  CHECK(has_step(r.trace, "surgery"));
  CHECK(r.coloring.at(3) == 5);

  // K7 with a projective K5 hanging off vertex 0: the K5 region is not a
  // disk, so a clique vertex away from it is peeled.
  auto rot = k7.rotation_map();
  auto neg = k7.negative_edges();
  const auto k5 = load_fixture("k5_projective");
  for (VertexId v : k5.vertices()) {
    for (VertexId w : k5.rotation(v)) rot[v + 7].push_back(w + 7);
  }
  for (const Edge& e : k5.negative_edges()) neg.insert(Edge::of(e.u + 7, e.v + 7));
  rot[0].push_back(7);
  rot[7].push_back(0);
  const EmbeddedGraph g(3, rot, neg);
  REQUIRE(is_two_cell(g));
  std::mt19937 rng(12);
  std::map<VertexId, std::vector<Color>> l2;
  for (VertexId v : g.vertices()) l2[v] = sample(rng, 9, 7);
  l2[10] = {2};
  const ListAssignment la(l2);
  const auto peeled = extend_main(g, la);
  CHECK(has_step(peeled.trace, "vertex-peel"));
  CHECK(verify_coloring(g, la, peeled.coloring).valid());
}

TEST_CASE("extend_main on a graph without the clique") {
  std::mt19937 rng(6);
  const auto k6 = load_fixture("k6_projective").with_declared_genus(2);
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : k6.vertices()) lists[v] = sample(rng, 9, 7);
  lists[0] = {4};
  const ListAssignment la(lists);
  const auto r = extend_main(k6, la);
  CHECK(has_step(r.trace, "leaf-solve"));
  CHECK(verify_coloring(k6, la, r.coloring).valid());
}

TEST_CASE("extend_main preconditions") {
  const auto sharp = sharpness_example(1);
  try {
    (void)extend_main(sharp.graph, sharp.lists);
    FAIL("distance 3 accepted");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("distance 3") != std::string::npos);
  }
  const auto k6 = load_fixture("k6_projective");
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : k6.vertices()) lists[v] = range(1, 6);
  lists[4] = range(1, 5);
  try {
    (void)extend_main(k6, ListAssignment(lists));
    FAIL("short list accepted");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("vertex 4") != std::string::npos);
  }
  const EmbeddedGraph plane(0, {{0, {1}}, {1, {0}}});
  CHECK_THROWS_AS((void)extend_main(plane, ListAssignment({{0, {1}}, {1, {1, 2}}})), PreconditionError);
}

TEST_CASE("extend_wide on torus grids") {
  for (int n = 4; n <= 6; ++n) {
    EmbeddedGraph::Rotation rot;
    auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) rot[id(i, j)] = {id(i, j + 1), id(i + 1, j), id(i, j - 1), id(i - 1, j)};
    }
    const auto g = EmbeddedGraph::two_cell(rot);
    std::mt19937 rng(static_cast<unsigned>(n));
    std::map<VertexId, std::vector<Color>> lists;
    for (VertexId v : g.vertices()) lists[v] = sample(rng, 9, 7);
    lists[id(0, 0)] = {1};
    lists[id(2, 1)] = {1};
    const ListAssignment la(lists);
    const auto r = extend_wide(g, la);
    CHECK(verify_coloring(g, la, r.coloring).valid());
  }
  const auto k7 = load_fixture("k7_torus");
  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : k7.vertices()) lists[v] = range(1, 7);
  CHECK_THROWS_AS((void)extend_wide(k7, ListAssignment(lists)), PreconditionError);
}

TEST_CASE("apex reduction") {
  // 6x6 torus grid, two far-apart square faces with 6-lists on their corners.
  const int n = 6;
  EmbeddedGraph::Rotation rot;
  auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rot[id(i, j)] = {id(i, j + 1), id(i + 1, j), id(i, j - 1), id(i - 1, j)};
  }
  const auto g = EmbeddedGraph::two_cell(rot);
  const auto faces = trace_faces(g);
  auto face_at = [&](VertexId v, VertexId w) {
    for (const Face& f : faces) {
      if (f.contains_vertex(v) && f.contains_vertex(w)) return f;
    }
    return faces.front();
  };
  const std::vector<Face> chosen{face_at(id(0, 0), id(1, 1)), face_at(id(3, 3), id(4, 4))};
  std::mt19937 rng(9);
  std::map<VertexId, std::vector<Color>> lists;
  std::set<VertexId> on;
  for (const Face& f : chosen) on.insert(f.boundary_vertices().begin(), f.boundary_vertices().end());
  for (VertexId v : g.vertices()) lists[v] = sample(rng, 8, on.contains(v) ? 6 : 7);
  const ListAssignment la(lists);

  const auto red = reduce_face_lists(g, chosen, la);
  CHECK(red.apexes.size() == 2);
  CHECK(red.alpha < 0);
  CHECK(derived_genus(red.graph) == 2);
  CHECK(min_pairwise_distance(red.graph, red.apexes) >= 4);
  for (VertexId v : on) CHECK(red.lists.allows(v, red.alpha));
  const auto r = extend_main(red.graph, red.lists);
  const auto back = restrict_to_original(red, r.coloring);
  CHECK(verify_coloring(g, la, back).valid());

  const std::vector<Face> none;
  const auto same = reduce_face_lists(g, none, la);
  CHECK(same.graph == g);
  CHECK(same.lists == la);

  const std::vector<Face> touching{face_at(id(0, 0), id(1, 1)), face_at(id(1, 1), id(2, 2))};
  CHECK_THROWS_AS((void)reduce_face_lists(g, touching, la), PreconditionError);
}
