// Extension of a boundary coloring into a disk bounded by a simple cycle.

#include <algorithm>
#include <limits>
#include <set>

#include "search.hpp"
#include "surfcolor/engine.hpp"
#include "surfcolor/errors.hpp"

namespace surfcolor {

namespace {

std::string name(VertexId v) { return std::to_string(v); }

bool same_cycle(std::vector<VertexId> walk, const std::vector<VertexId>& cycle) {
  if (walk.size() != cycle.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < walk.size(); ++r) {
      if (walk == cycle) return true;
      std::rotate(walk.begin(), walk.begin() + 1, walk.end());
    }
    std::reverse(walk.begin(), walk.end());
  }
  return false;
}

void require_plane(const EmbeddedGraph& g) {
  for (const auto& comp : connected_components(g)) {
    if (derived_genus(g.induced_subgraph(comp)) != 0) throw PreconditionError("graph is not plane");
  }
}

// A simple cycle of length k with a proper boundary coloring, inside a plane
// graph. Interior vertices carry their host ids and lists.
struct Disk {
  const EmbeddedGraph& plane;
  const std::vector<VertexId>& outer;
  const Coloring& outer_colors;
};

Coloring call_leaf(const EmbeddedGraph& plane, const ListAssignment& la, std::span<const VertexId> outer,
                   const Coloring& outer_colors) {
  try {
    return leaf_planar_solve(plane, la, outer, outer_colors);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("face extension reached an unsupported leaf: ") + e.what());
  }
}

FaceExtension colored(Coloring c) {
  FaceExtension out;
  out.coloring = std::move(c);
  return out;
}

FaceExtension exceptional(VertexId x) {
  FaceExtension out;
  out.status = FaceExtension::Status::kExceptional;
  out.exceptional_vertex = x;
  return out;
}

FaceExtension extend_disk(const Disk& d, const ListAssignment& la) {
  const std::set<VertexId> on_cycle(d.outer.begin(), d.outer.end());
  const auto k = static_cast<int>(d.outer.size());
  std::vector<VertexId> interior;
  std::vector<VertexId> pinned;
  std::vector<VertexId> open;
  for (VertexId v : d.plane.vertices()) {
    if (on_cycle.contains(v)) continue;
    interior.push_back(v);
    if (!la.has(v)) throw PreconditionError("interior vertex " + name(v) + " has no list");
    (la.is_precolored(v) ? pinned : open).push_back(v);
  }

  Coloring known = d.outer_colors;
  for (VertexId p : pinned) {
    const Color pc = detail::fixed_color(la, p);
    for (VertexId w : d.plane.rotation(p)) {
      if (on_cycle.contains(w) && d.outer_colors.at(w) == pc)
        throw PreconditionError("precolored vertex " + name(p) + " repeats the color of boundary neighbour " + name(w));
      if (la.is_precolored(w) && !on_cycle.contains(w))
        throw PreconditionError("precolored vertices " + name(p) + " and " + name(w) + " are adjacent");
    }
    known[p] = pc;
  }
  Coloring result;
  for (VertexId p : pinned) result[p] = known[p];
  if (open.empty()) return colored(result);

  // Colors already forced on the neighbourhood of an open vertex.
  auto forced = [&](VertexId v) {
    std::set<Color> s;
    int pinned_nbrs = 0;
    for (VertexId w : d.plane.rotation(v)) {
      if (auto it = known.find(w); it != known.end()) {
        s.insert(it->second);
        pinned_nbrs += !on_cycle.contains(w);
      }
    }
    if (pinned_nbrs > 1) throw PreconditionError("vertex " + name(v) + " has two precolored neighbours");
    return s;
  };
  auto attachments = [&](VertexId v) {
    int n = 0;
    for (VertexId w : d.plane.rotation(v)) n += on_cycle.contains(w);
    return n;
  };

  std::size_t l = std::numeric_limits<std::size_t>::max();
  for (VertexId v : open) {
    l = std::min(l, la.size_of(v));
    const auto f = forced(v);
    const auto& lv = la.list(v);
    if (std::all_of(lv.begin(), lv.end(), [&](Color c) { return f.contains(c); })) return exceptional(v);
  }
  const auto li = static_cast<int>(l);

  const bool case_a = (k == 3 && li >= 6) || (k >= 4 && k <= 6 && li >= k + 2) || (k == 6 && li == 7);
  const bool case_b = k >= 7 && li >= k + 2;
  const bool case_c = k >= 9 && li == k + 1;
  if (!case_a && !case_b && !case_c)
    throw PreconditionError("no extension regime for a face of size " + std::to_string(k) + " with lists of size " +
                            std::to_string(li));

  ListAssignment reduced = la;
  if (case_a) {
    // Precolored interior vertices are excised; the outer cycle stays fixed.
    for (VertexId v : open) {
      for (VertexId w : d.plane.rotation(v)) {
        if (la.is_precolored(w) && !on_cycle.contains(w)) reduced.remove_color(v, known.at(w));
      }
    }
    const auto rest = d.plane.without_vertices(pinned);
    Coloring c = call_leaf(rest, reduced, d.outer, d.outer_colors);
    for (VertexId v : open) result[v] = c.at(v);
    return colored(result);
  }

  const int threshold = case_b ? k - 3 : k - 4;
  std::optional<VertexId> hub;
  int hub_attach = -1;
  for (VertexId v : interior) {
    const int a = attachments(v);
    if (a >= threshold && a > hub_attach) {
      hub = v;
      hub_attach = a;
    }
  }

  if (!hub) {
    // Every interior vertex meets the cycle in few vertices: drop the cycle
    // and the precolored vertices, trimming the lists they constrain.
    for (VertexId v : open) {
      for (Color c : forced(v)) {
        if (std::binary_search(reduced.list(v).begin(), reduced.list(v).end(), c)) reduced.remove_color(v, c);
      }
    }
    std::vector<VertexId> drop(d.outer.begin(), d.outer.end());
    drop.insert(drop.end(), pinned.begin(), pinned.end());
    Coloring c = call_leaf(d.plane.without_vertices(drop), reduced, {}, {});
    for (VertexId v : open) result[v] = c.at(v);
    return colored(result);
  }

  // Color the hub, then split the disk along its edges to the cycle.
  const VertexId x = *hub;
  if (!known.contains(x)) {
    const auto f = forced(x);
    for (Color c : la.list(x)) {
      if (!f.contains(c)) {
        known[x] = c;
        break;
      }
    }
    if (!known.contains(x)) return exceptional(x);
  }
  result[x] = known.at(x);

  std::vector<Edge> frame_edges;
  for (int i = 0; i < k; ++i) frame_edges.push_back(Edge::of(d.outer[static_cast<std::size_t>(i)], d.outer[static_cast<std::size_t>((i + 1) % k)]));
  for (VertexId w : d.plane.rotation(x)) {
    if (on_cycle.contains(w)) frame_edges.push_back(Edge::of(x, w));
  }
  const auto frame = d.plane.edge_subgraph(frame_edges);
  for (const FrameRegion& region : locate_regions(frame, d.plane)) {
    if (region.interior.empty()) continue;
    const FacePatch sub = duplicate_boundary(region.face, frame, d.plane);
    Coloring sub_colors;
    for (const auto& [copy, host] : sub.attachment) sub_colors[copy] = known.at(host);
    const auto inner = extend_disk({sub.patch_graph, sub.outer_cycle, sub_colors}, la);
    if (!inner.colored()) return inner;
    for (const auto& [v, c] : inner.coloring) result[v] = c;
  }
  return colored(result);
}

}  // namespace

Coloring leaf_planar_solve(const EmbeddedGraph& plane, const ListAssignment& la, std::span<const VertexId> outer_cycle,
                           const Coloring& outer_coloring) {
  require_plane(plane);
  const std::vector<VertexId> outer(outer_cycle.begin(), outer_cycle.end());
  const std::set<VertexId> on_cycle(outer.begin(), outer.end());
  const std::size_t k = outer.size();

  if (k == 0) {
    if (!outer_coloring.empty()) throw PreconditionError("outer colors given without an outer cycle");
  } else {
    if (k < 3 || k > 6) throw PreconditionError("outer cycle of length " + std::to_string(k) + " is outside 3..6");
    if (on_cycle.size() != k) throw PreconditionError("outer cycle repeats a vertex");
    bool facial = false;
    for (const Face& f : trace_faces(plane)) facial = facial || same_cycle(f.corner_vertices(), outer);
    if (!facial) throw PreconditionError("outer cycle does not bound a face");
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId a = outer[i];
      const VertexId b = outer[(i + 1) % k];
      if (!outer_coloring.contains(a)) throw PreconditionError("outer vertex " + name(a) + " has no color");
      if (outer_coloring.at(a) == outer_coloring.at(b))
        throw PreconditionError("outer vertices " + name(a) + " and " + name(b) + " share a color");
    }
  }

  std::set<Color> cycle_colors;
  for (VertexId v : outer) cycle_colors.insert(outer_coloring.at(v));
  const std::size_t need = std::max<std::size_t>(5, k + 1);
  for (VertexId v : plane.vertices()) {
    if (on_cycle.contains(v)) continue;
    if (!la.has(v)) throw PreconditionError("vertex " + name(v) + " has no list");
    const std::size_t s = la.size_of(v);
    if (s >= need) continue;
    if (k == 6 && s == 6) {
      std::size_t attached = 0;
      for (VertexId w : plane.rotation(v)) attached += on_cycle.contains(w);
      const auto& lv = la.list(v);
      const bool trapped = std::all_of(lv.begin(), lv.end(), [&](Color c) { return cycle_colors.contains(c); });
      if (attached == 6 && trapped)
        throw PreconditionError("vertex " + name(v) + " sees all six outer colors and has no other");
      continue;
    }
    throw PreconditionError("vertex " + name(v) + " has " + std::to_string(s) + " colors, needs " + std::to_string(need));
  }

  Coloring fixed;
  for (VertexId v : outer) fixed[v] = outer_coloring.at(v);
  auto c = detail::search_coloring(plane, la, fixed);
  if (!c) throw InternalError("no coloring of a plane graph whose lists guarantee one");
  return *c;
}

FaceExtension extend_into_face(const FacePatch& patch, const Coloring& boundary_coloring, const ListAssignment& la) {
  Coloring outer;
  for (const auto& [copy, host] : patch.attachment) {
    auto it = boundary_coloring.find(host);
    if (it == boundary_coloring.end()) throw PreconditionError("boundary vertex " + name(host) + " has no color");
    outer[copy] = it->second;
  }
  const std::size_t k = patch.outer_cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId a = patch.outer_cycle[i];
    const VertexId b = patch.outer_cycle[(i + 1) % k];
    if (outer.at(a) == outer.at(b))
      throw PreconditionError("boundary vertices " + name(patch.attachment.at(a)) + " and " +
                              name(patch.attachment.at(b)) + " share a color");
  }
  if (patch.interior_vertices().empty()) return colored({});
  return extend_disk({patch.patch_graph, patch.outer_cycle, outer}, la);
}

}  // namespace surfcolor
