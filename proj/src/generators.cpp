#include "surfcolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "surfcolor/errors.hpp"
#include "surfcolor/heawood.hpp"
#include "surfcolor/io.hpp"

namespace surfcolor {

namespace detail {
const std::map<std::string, std::string>& fixture_texts();
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Color> palette_sample(Rng& rng, int palette, int size) {
  std::vector<Color> all(static_cast<std::size_t>(palette));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  return all;
}

// Adds vertex `id` inside `face`, joined to a contiguous run of its corners
// (at least two when the face allows), keeping one corner per vertex.
EmbeddedGraph insert_in_face(const EmbeddedGraph& g, const Face& face, VertexId id, Rng& rng, bool whole_face) {
  const auto k = static_cast<int>(face.size());
  const int start = uniform(rng, 0, k - 1);
  const int len = whole_face ? k : uniform(rng, std::min(2, k), k);
  std::vector<std::size_t> corners;
  std::set<VertexId> seen;
  for (int i = 0; i < len; ++i) {
    const auto c = static_cast<std::size_t>((start + i) % k);
    if (seen.insert(face.walk()[c].from).second) corners.push_back(c);
  }
  return add_vertex_in_face(g, face, corners, id);
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::fixture_texts()) out.push_back(name);
  return out;
}

EmbeddedGraph named_fixture(const std::string& name) {
  const auto& texts = detail::fixture_texts();
  auto it = texts.find(name);
  if (it == texts.end()) throw UnsupportedError("no fixture named '" + name + "'");
  return parse_graph(it->second);
}

Fixture complete_graph_fixture(int n) {
  static const std::map<int, std::string> names = {{5, "k5_projective"}, {6, "k6_projective"}, {7, "k7_torus"}};
  auto it = names.find(n);
  if (it == names.end()) throw UnsupportedError("no embedding of K_" + std::to_string(n) + " is shipped");
  Fixture f;
  f.name = it->second;
  f.graph = named_fixture(f.name);
  f.genus = inverse_genus(n);
  f.vertex_count = n;
  f.edge_count = n * (n - 1) / 2;
  f.face_count = 2 - f.genus - f.vertex_count + f.edge_count;
  for (const Face& face : trace_faces(f.graph)) f.max_face_size = std::max(f.max_face_size, face.size());
  return f;
}

Instance sharpness_example(int eps, const SharpnessOptions& options) {
  if (eps < 1) throw PreconditionError("Euler genus must be at least 1");
  if (options.path_length < 1) throw PreconditionError("path length must be at least 1");
  const int h = heawood_number(eps);
  const auto base = complete_graph_fixture(h).graph;
  auto rot = base.rotation_map();
  std::map<VertexId, std::vector<Color>> lists;
  std::vector<Color> clique_list(static_cast<std::size_t>(h));
  std::iota(clique_list.begin(), clique_list.end(), options.exclude_pendant_color ? 2 : 1);
  std::vector<Color> path_list(static_cast<std::size_t>(h));
  std::iota(path_list.begin(), path_list.end(), 1);
  for (VertexId v = 0; v < h; ++v) {
    lists[v] = clique_list;
    auto& anchor = rot.at(v);
    VertexId prev = v;
    for (int j = 0; j < options.path_length; ++j) {
      const VertexId p = h + v + h * j;
      if (j == 0) anchor.insert(anchor.begin() + 1, p);
      else rot[prev].push_back(p);
      rot[p] = {prev};
      lists[p] = j + 1 == options.path_length ? std::vector<Color>{1} : path_list;
      prev = p;
    }
  }
  return {EmbeddedGraph(eps, std::move(rot), base.negative_edges()), ListAssignment(std::move(lists))};
}

DkGraph dk_graph(int n) {
  if (n < 2) throw PreconditionError("K_{n+1} minus an edge needs n >= 2");
  EmbeddedGraph::Rotation rot;
  const VertexId x = n - 1;
  const VertexId y = n;
  for (VertexId v = 0; v <= n; ++v) {
    for (VertexId w = 0; w <= n; ++w) {
      if (w != v && Edge::of(v, w) != Edge{x, y}) rot[v].push_back(w);
    }
  }
  return {EmbeddedGraph::two_cell(std::move(rot)), x, y};
}

Instance random_theorem_instance(int eps, int budget, std::uint64_t seed) {
  if (eps != 1 && eps != 2) throw UnsupportedError("random instances are available for Euler genus 1 and 2");
  const int h = heawood_number(eps);
  if (budget < h) throw PreconditionError("budget " + std::to_string(budget) + " cannot hold K_" + std::to_string(h));
  Rng rng(seed);
  EmbeddedGraph g = complete_graph_fixture(h).graph;
  for (VertexId id = h; id < budget; ++id) {
    const auto faces = trace_faces(g);
    const Face& f = faces[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(faces.size()) - 1))];
    g = insert_in_face(g, f, id, rng, uniform(rng, 0, 9) < 6);
  }

  const int palette = h + 2;
  std::vector<VertexId> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  const int want = uniform(rng, 1, 3);
  std::vector<VertexId> pinned;
  for (VertexId v : order) {
    if (static_cast<int>(pinned.size()) == want) break;
    bool far = true;
    for (VertexId p : pinned) far = far && graph_distance(g, v, p) >= 4;
    if (far) pinned.push_back(v);
  }
  if (pinned.empty()) throw PreconditionError("no room for a precolored vertex");

  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : g.vertices()) lists[v] = palette_sample(rng, palette, h);
  for (VertexId p : pinned) lists[p] = {uniform(rng, 1, palette)};
  Instance out{g, ListAssignment(std::move(lists))};
  if (min_pairwise_distance(out.graph, pinned) < 4) throw InternalError("random instance violates its distance bound");
  return out;
}

PatchInstance random_patch_instance(int k, int l, int interior, std::uint64_t seed) {
  if (k < 3) throw PreconditionError("a face needs at least 3 boundary vertices");
  if (l < 1 || interior < 0) throw PreconditionError("list size and interior count must be positive");
  Rng rng(seed);
  EmbeddedGraph::Rotation rot;
  for (VertexId v = 0; v < k; ++v) rot[v] = {(v + k - 1) % k, (v + 1) % k};
  EmbeddedGraph host(0, std::move(rot));
  const auto cycle_faces = trace_faces(host);
  const Face outside = cycle_faces.back();
  for (VertexId id = k; id < k + interior; ++id) {
    std::vector<Face> inner;
    for (const Face& f : trace_faces(host)) {
      if (!(f == outside)) inner.push_back(f);
    }
    const Face& f = inner[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(inner.size()) - 1))];
    host = insert_in_face(host, f, id, rng, false);
  }

  std::vector<Edge> cycle;
  for (VertexId v = 0; v < k; ++v) cycle.push_back(Edge::of(v, (v + 1) % k));
  const auto frame = host.edge_subgraph(cycle);
  std::optional<Face> face;
  for (const FrameRegion& r : locate_regions(frame, host)) {
    if (!r.interior.empty() || (interior == 0 && !face)) face = r.face;
  }

  const int palette = l + 2;
  PatchInstance out;
  out.patch = duplicate_boundary(*face, frame, host);
  for (VertexId v = 0; v < k; ++v) {
    std::vector<Color> options;
    for (Color c = 1; c <= std::max(palette, 3); ++c) {
      const bool clash = (v > 0 && out.boundary_coloring.at(v - 1) == c) || (v == k - 1 && out.boundary_coloring.at(0) == c);
      if (!clash) options.push_back(c);
    }
    out.boundary_coloring[v] = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  }

  std::vector<VertexId> inside;
  for (VertexId v = k; v < k + interior; ++v) inside.push_back(v);
  std::shuffle(inside.begin(), inside.end(), rng);
  std::map<VertexId, Color> pinned;
  for (VertexId v : inside) {
    if (uniform(rng, 0, 9) >= 3) continue;
    bool far = true;
    for (const auto& [p, c] : pinned) far = far && graph_distance(host, v, p) >= 3;
    if (!far) continue;
    std::set<Color> near;
    for (VertexId w : host.rotation(v)) {
      if (w < k) near.insert(out.boundary_coloring.at(w));
    }
    std::vector<Color> options;
    for (Color c = 1; c <= palette; ++c) {
      if (!near.contains(c)) options.push_back(c);
    }
    if (!options.empty()) pinned[v] = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  }

  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v = k; v < k + interior; ++v) {
    if (auto it = pinned.find(v); it != pinned.end()) {
      lists[v] = {it->second};
      continue;
    }
    auto list = palette_sample(rng, palette, l);
    std::set<Color> forced;
    for (VertexId w : host.rotation(v)) {
      if (w < k) forced.insert(out.boundary_coloring.at(w));
      else if (pinned.contains(w)) forced.insert(pinned.at(w));
    }
    if (std::all_of(list.begin(), list.end(), [&](Color c) { return forced.contains(c); })) {
      for (Color c = 1; c <= palette + k + 1; ++c) {
        if (!forced.contains(c)) {
          list.front() = c;
          break;
        }
      }
    }
    lists[v] = list;
  }
  out.lists = ListAssignment(std::move(lists));
  return out;
}

}  // namespace surfcolor
