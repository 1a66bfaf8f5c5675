// The inductive driver: clique, faces of the clique, surgery and the
// doubled-clique fallback.

#include <algorithm>
#include <set>

#include "json.hpp"
#include "search.hpp"
#include "surfcolor/engine.hpp"
#include "surfcolor/errors.hpp"
#include "surfcolor/heawood.hpp"
#include "surfcolor/oracle.hpp"

namespace surfcolor {

namespace {

std::string name(VertexId v) { return std::to_string(v); }

void record(ExtensionTrace& trace, std::string step, std::vector<VertexId> vertices, int genus_before, int genus_after,
            Coloring assigned, std::string note = {}) {
  trace.steps.push_back({std::move(step), std::move(vertices), genus_before, genus_after, std::move(assigned), std::move(note)});
}

std::vector<VertexId> keys(const Coloring& c) {
  std::vector<VertexId> out;
  for (const auto& [v, col] : c) out.push_back(v);
  return out;
}

Color least_free(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& c, VertexId v) {
  std::set<Color> used;
  for (VertexId w : g.rotation(v)) {
    if (auto it = c.find(w); it != c.end()) used.insert(it->second);
  }
  for (Color col : la.list(v)) {
    if (!used.contains(col)) return col;
  }
  throw InternalError("vertex " + name(v) + " has no free color");
}

// Excise P, then search. Used when no clique of the Heawood size is present,
// where lists of size H-1 suffice.
Coloring solve_without_clique(const EmbeddedGraph& g, const ListAssignment& la, ExtensionTrace& trace,
                              const std::string& note = {}) {
  const int eps = g.declared_genus();
  const auto pinned = detail::precolored_in(g, la);
  ListAssignment reduced = la;
  Coloring fixed;
  for (VertexId p : pinned) {
    const Color pc = detail::fixed_color(la, p);
    fixed[p] = pc;
    for (VertexId w : g.rotation(p)) {
      if (la.is_precolored(w)) throw InternalError("adjacent precolored vertices " + name(p) + " and " + name(w));
      reduced.remove_color(w, pc);
    }
  }
  if (!pinned.empty()) record(trace, "excise", pinned, eps, eps, fixed);
  const auto rest = g.without_vertices(pinned);
  auto c = detail::search_coloring(rest, reduced);
  if (!c) throw InternalError("no coloring after excision although the lists guarantee one");
  record(trace, "leaf-solve", rest.vertices(), eps, eps, *c, note);
  c->insert(fixed.begin(), fixed.end());
  return *c;
}

Coloring solve(const EmbeddedGraph& g, const ListAssignment& la, ExtensionTrace& trace);

FaceExtension extend_checked(const FacePatch& patch, const Coloring& boundary, const ListAssignment& la) {
  try {
    return extend_into_face(patch, boundary, la);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("face extension rejected its input: ") + e.what());
  }
}

// K plus the exceptional vertex x forms K_{H+1} minus an edge that
// triangulates the surface; color it and fill the triangles.
Coloring solve_doubled_clique(const EmbeddedGraph& g, const ListAssignment& la, const std::vector<VertexId>& clique,
                              VertexId x, ExtensionTrace& trace) {
  const int eps = g.declared_genus();
  std::vector<VertexId> missing;
  for (VertexId k : clique) {
    if (!g.adjacent(x, k)) missing.push_back(k);
  }
  if (missing.size() != 1) throw InternalError("exceptional vertex " + name(x) + " does not complete K_{n+1} minus an edge");
  std::vector<VertexId> dk_vertices = clique;
  dk_vertices.push_back(x);
  std::sort(dk_vertices.begin(), dk_vertices.end());
  const auto frame = g.induced_subgraph(dk_vertices);
  const auto regions = locate_regions(frame, g);
  for (const FrameRegion& r : regions) {
    if (!r.two_cell() || r.face.size() != 3)
      throw InternalError("K_{n+1} minus an edge around vertex " + name(x) + " does not triangulate the surface");
  }

  ListAssignment dk_lists = la.restricted_to(frame);
  Coloring pinned;
  const std::set<VertexId> in_dk(dk_vertices.begin(), dk_vertices.end());
  for (VertexId p : detail::precolored_in(g, la)) {
    if (in_dk.contains(p)) continue;
    bool touches = false;
    for (VertexId w : g.rotation(p)) {
      if (in_dk.contains(w)) {
        touches = true;
        if (!dk_lists.is_precolored(w)) dk_lists.remove_color(w, detail::fixed_color(la, p));
      }
    }
    if (touches) pinned[p] = detail::fixed_color(la, p);
  }
  if (!pinned.empty()) record(trace, "excise", keys(pinned), eps, eps, pinned);

  Coloring c;
  try {
    c = color_dk(DkGraph{frame, x, missing.front()}, dk_lists);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("doubled clique lists out of range: ") + e.what());
  }
  record(trace, "dk-color", dk_vertices, eps, eps, c);
  c.insert(pinned.begin(), pinned.end());

  for (const FrameRegion& r : regions) {
    if (r.interior.empty()) continue;
    const auto ext = extend_checked(duplicate_boundary(r.face, frame, g), c, la);
    if (!ext.colored()) throw InternalError("triangle of the doubled clique has exceptional vertex " + name(ext.exceptional_vertex));
    record(trace, "face-extend", r.interior, eps, eps, ext.coloring);
    for (const auto& [v, col] : ext.coloring) c[v] = col;
  }
  return c;
}

Coloring solve_with_clique(const EmbeddedGraph& g, const ListAssignment& la, const std::vector<VertexId>& clique,
                           ExtensionTrace& trace) {
  const int eps = g.declared_genus();
  const std::size_t mark = trace.steps.size();
  const std::set<VertexId> in_k(clique.begin(), clique.end());

  std::optional<VertexId> vstar;
  for (VertexId p : detail::precolored_in(g, la)) {
    bool near = in_k.contains(p);
    for (VertexId w : g.rotation(p)) near = near || in_k.contains(w);
    if (!near) continue;
    if (vstar) throw InternalError("precolored vertices " + name(*vstar) + " and " + name(p) + " both touch the clique");
    vstar = p;
  }

  const auto frame = g.induced_subgraph(clique);
  const auto regions = locate_regions(frame, g);
  std::vector<std::pair<const FrameRegion*, std::vector<VertexId>>> fill;
  for (const FrameRegion& r : regions) {
    if (!r.two_cell()) continue;
    std::vector<VertexId> inside;
    for (VertexId v : r.interior) {
      if (!vstar || v != *vstar) inside.push_back(v);
    }
    if (!inside.empty()) fill.emplace_back(&r, std::move(inside));
  }
  std::stable_sort(fill.begin(), fill.end(), [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });

  if (fill.empty()) {
    const std::size_t core_size = clique.size() + (vstar && !in_k.contains(*vstar) ? 1 : 0);
    if (g.vertex_count() == core_size) {
      std::optional<VertexId> outside;
      if (vstar && !in_k.contains(*vstar)) outside = vstar;
      Coloring c;
      try {
        c = color_clique_one_fixed(g, clique, la, outside);
      } catch (const PreconditionError& e) {
        throw InternalError(std::string("clique lists out of range: ") + e.what());
      }
      record(trace, "clique-color", g.vertices(), eps, eps, c);
      return c;
    }

    // Everything else sits in regions that are not disks. A clique vertex
    // lying only on disk regions has no neighbours outside the clique.
    for (VertexId v : clique) {
      if (la.is_precolored(v) || (vstar && g.adjacent(v, *vstar))) continue;
      bool disk_only = true;
      for (const FrameRegion& r : regions) disk_only = disk_only && (r.two_cell() || !r.face.contains_vertex(v));
      if (!disk_only || g.degree(v) + 1 != clique.size()) continue;
      const VertexId gone[] = {v};
      Coloring c = solve(g.without_vertices(gone), la, trace);
      const Color col = least_free(g, la, c, v);
      c[v] = col;
      record(trace, "vertex-peel", {v}, eps, eps, {{v, col}});
      return c;
    }
    return solve_without_clique(g, la, trace, "no clique vertex could be peeled; exhaustive fallback");
  }

  std::vector<VertexId> removed;
  for (const auto& [r, inside] : fill) removed.insert(removed.end(), inside.begin(), inside.end());
  Coloring c = solve(g.without_vertices(removed), la, trace);
  for (const auto& [r, inside] : fill) {
    const auto ext = extend_checked(duplicate_boundary(r->face, frame, g), c, la);
    if (!ext.colored()) {
      trace.steps.resize(mark);
      return solve_doubled_clique(g, la, clique, ext.exceptional_vertex, trace);
    }
    record(trace, "face-extend", inside, eps, eps, ext.coloring);
    for (const auto& [v, col] : ext.coloring) c[v] = col;
  }
  return c;
}

Coloring solve_connected(const EmbeddedGraph& g, const ListAssignment& la, ExtensionTrace& trace) {
  const int h = heawood_number(g.declared_genus());
  const auto clique = find_clique(g, h);
  if (!clique) return solve_without_clique(g, la, trace);
  if (!is_two_cell(g)) {
    const auto s = surgery_to_two_cell(g);
    record(trace, "surgery", {}, s.report.genus_before, s.report.genus_after, {},
           "n1=" + std::to_string(s.report.n1) + " n2=" + std::to_string(s.report.n2));
    return solve_connected(s.graph, la, trace);
  }
  return solve_with_clique(g, la, *clique, trace);
}

Coloring solve(const EmbeddedGraph& g, const ListAssignment& la, ExtensionTrace& trace) {
  if (g.vertex_count() == 0) return {};
  const auto comps = connected_components(g);
  if (comps.size() == 1) return solve_connected(g, la, trace);
  Coloring c;
  for (const auto& comp : comps) {
    for (const auto& [v, col] : solve_connected(g.induced_subgraph(comp), la, trace)) c[v] = col;
  }
  return c;
}

void require_lists(const EmbeddedGraph& g, const ListAssignment& la, int h) {
  require_lists_cover(g, la);
  for (VertexId v : g.vertices()) {
    const std::size_t s = la.size_of(v);
    if (s != 1 && s < static_cast<std::size_t>(h))
      throw PreconditionError("vertex " + name(v) + " has a list of size " + std::to_string(s) + ", needs at least " +
                              std::to_string(h));
  }
}

void require_spread(const EmbeddedGraph& g, const ListAssignment& la, int min_distance) {
  const auto pinned = detail::precolored_in(g, la);
  if (pinned.size() < 2) return;
  const auto cp = closest_pair(g, pinned);
  if (cp.distance < min_distance)
    throw PreconditionError("precolored vertices " + name(cp.first) + " and " + name(cp.second) + " are at distance " +
                            std::to_string(cp.distance) + ", need at least " + std::to_string(min_distance));
}

ExtensionResult finish(const EmbeddedGraph& g, const ListAssignment& la, ExtensionResult r) {
  if (r.coloring.size() != g.vertex_count()) throw InternalError("the extension missed some vertices");
  const auto report = verify_coloring(g, la, r.coloring);
  if (!report.valid()) throw InternalError("the extension is not a proper list coloring: " + report.describe());
  if (r.trace.replay() != r.coloring) throw InternalError("the trace does not replay to the returned coloring");
  return r;
}

}  // namespace

Surgery surgery_to_two_cell(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw PreconditionError("surgery needs a connected graph");
  SurgeryReport report;
  report.genus_before = g.declared_genus();
  report.genus_after = derived_genus(g);
  report.n2 = report.genus_before - report.genus_after;
  if (report.n2 == 0) throw PreconditionError("the embedding is already 2-cell");
  report.n1 = report.genus_after - inverse_genus(heawood_number(report.genus_before));
  {
    // The missing genus is attributed to the largest face.
    const auto faces = trace_faces(g);
    std::size_t at = 0;
    for (std::size_t i = 1; i < faces.size(); ++i) {
      if (faces[i].size() > faces[at].size()) at = i;
    }
    int drop = report.n2;
    for (; drop >= 2; drop -= 2) report.cuts.push_back({at, CutKind::kNonseparatingTwoSided, 2});
    if (drop == 1) report.cuts.push_back({at, CutKind::kNonseparatingOneSided, 1});
    report.derived_faces.push_back(faces[at]);
  }
  return {g.with_declared_genus(report.genus_after), std::move(report)};
}

Coloring ExtensionTrace::replay() const {
  Coloring c;
  for (const TraceStep& s : steps) {
    for (const auto& [v, col] : s.assigned) c[v] = col;
  }
  return c;
}

std::string ExtensionTrace::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const TraceStep& s : steps) {
    nlohmann::ordered_json colors = nlohmann::ordered_json::array();
    for (const auto& [v, col] : s.assigned) colors.push_back({v, col});
    nlohmann::ordered_json step = {{"step", s.name},
                           {"vertices", s.vertices},
                           {"genus_before", s.genus_before},
                           {"genus_after", s.genus_after},
                           {"colors", colors}};
    if (!s.note.empty()) step["note"] = s.note;
    out.push_back(std::move(step));
  }
  return nlohmann::ordered_json{{"steps", out}}.dump(2);
}

ExtensionResult extend_main(const EmbeddedGraph& g, const ListAssignment& la) {
  const int eps = g.declared_genus();
  if (eps < 1) throw PreconditionError("the surface must have Euler genus at least 1");
  const int h = heawood_number(eps);
  require_lists(g, la, h);
  require_spread(g, la, 4);
  ExtensionResult r;
  r.coloring = solve(g, la.restricted_to(g), r.trace);
  return finish(g, la, std::move(r));
}

ExtensionResult extend_wide(const EmbeddedGraph& g, const ListAssignment& la) {
  const int eps = g.declared_genus();
  if (eps < 1) throw PreconditionError("the surface must have Euler genus at least 1");
  if (!is_connected(g) || !is_two_cell(g)) throw PreconditionError("the embedding must be connected and 2-cell");
  const int h = heawood_number(eps);
  require_lists(g, la, h);
  require_spread(g, la, 3);
  if (g.edge_count() >= g.vertex_count() && edge_width(g, 3) != kInfiniteDistance)
    throw PreconditionError("edge-width is below 4");
  if (auto k = find_clique(g, h))
    throw InternalError("an embedding of edge-width at least 4 contains K_" + std::to_string(h));
  ExtensionResult r;
  r.coloring = solve_without_clique(g, la.restricted_to(g), r.trace);
  return finish(g, la, std::move(r));
}

ApexReduction reduce_face_lists(const EmbeddedGraph& g, std::span<const Face> faces, const ListAssignment& la) {
  const int eps = g.declared_genus();
  if (eps < 1) throw PreconditionError("the surface must have Euler genus at least 1");
  require_lists_cover(g, la);
  if (faces.empty()) return {g, la, {}, fresh_color(la)};
  const int h = heawood_number(eps);
  const auto all = trace_faces(g);
  std::set<VertexId> on_faces;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (std::find(all.begin(), all.end(), faces[i]) == all.end())
      throw PreconditionError("face " + std::to_string(i) + " is not a face of the graph");
    for (std::size_t j = 0; j < i; ++j) {
      for (VertexId a : faces[i].boundary_vertices()) {
        for (VertexId b : faces[j].boundary_vertices()) {
          if (graph_distance(g, a, b) < 2)
            throw PreconditionError("faces " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are closer than distance 2 (vertices " + name(b) + " and " + name(a) + ")");
        }
      }
    }
    on_faces.insert(faces[i].boundary_vertices().begin(), faces[i].boundary_vertices().end());
  }
  for (VertexId v : g.vertices()) {
    const std::size_t need = static_cast<std::size_t>(on_faces.contains(v) ? h - 1 : h);
    if (la.size_of(v) < need)
      throw PreconditionError("vertex " + name(v) + " has a list of size " + std::to_string(la.size_of(v)) +
                              ", needs at least " + std::to_string(need));
  }

  ApexReduction out{g, la, {}, fresh_color(la)};
  VertexId next = g.max_vertex_id() + 1;
  for (const Face& f : faces) {
    std::vector<std::size_t> corners;
    std::set<VertexId> seen;
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (seen.insert(f.walk()[c].from).second) corners.push_back(c);
    }
    out.graph = add_vertex_in_face(out.graph, f, corners, next);
    out.lists.set_list(next, {out.alpha});
    out.apexes.push_back(next++);
  }
  for (VertexId v : on_faces) out.lists.add_color(v, out.alpha);
  return out;
}

Coloring restrict_to_original(const ApexReduction& reduction, const Coloring& c) {
  Coloring out = c;
  for (VertexId a : reduction.apexes) out.erase(a);
  return out;
}

}  // namespace surfcolor
