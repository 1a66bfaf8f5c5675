#include "surfcolor/embedding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "surfcolor/errors.hpp"

namespace surfcolor {

namespace {

std::string vertex_name(VertexId v) { return std::to_string(v); }

// Flat indexing of (vertex slot, orientation) traversal states.
class StateSpace {
 public:
  explicit StateSpace(const EmbeddedGraph& g) : g_(g) {
    const auto& vs = g.vertices();
    offsets_.resize(vs.size() + 1, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) offsets_[i + 1] = offsets_[i] + g.degree(vs[i]);
  }

  std::size_t slot_count() const { return offsets_.back(); }
  std::size_t state_count() const { return 2 * slot_count(); }

  std::size_t vertex_index(VertexId v) const {
    const auto& vs = g_.vertices();
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  }

  std::size_t slot_of(VertexId v, VertexId neighbour) const {
    const auto& rot = g_.rotation(v);
    auto it = std::find(rot.begin(), rot.end(), neighbour);
    return static_cast<std::size_t>(it - rot.begin());
  }

  std::size_t encode(VertexId v, std::size_t slot, int orientation) const {
    return 2 * (offsets_[vertex_index(v)] + slot) + (orientation < 0 ? 1 : 0);
  }

  struct State {
    VertexId vertex;
    std::size_t slot;
    int orientation;
  };

  State decode(std::size_t id) const {
    const int orientation = (id % 2 == 0) ? 1 : -1;
    const std::size_t flat = id / 2;
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
    const std::size_t vi = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {g_.vertices()[vi], flat - offsets_[vi], orientation};
  }

  // Leave along `slot`, arrive, and turn by the new orientation.
  State step(const State& s) const {
    const VertexId w = g_.rotation(s.vertex)[s.slot];
    const int o = s.orientation * g_.sign(s.vertex, w);
    const std::size_t deg = g_.degree(w);
    const std::size_t j = slot_of(w, s.vertex);
    const std::size_t next = o > 0 ? (j + 1) % deg : (j + deg - 1) % deg;
    return {w, next, o};
  }

  // A state of the same face walked in the opposite direction.
  State mirror(const State& s) const {
    const VertexId w = g_.rotation(s.vertex)[s.slot];
    const int o = s.orientation * g_.sign(s.vertex, w);
    return {w, slot_of(w, s.vertex), -o};
  }

 private:
  const EmbeddedGraph& g_;
  std::vector<std::size_t> offsets_;
};

// Smallest rotation of the walk, over both directions.
Face canonical_face(const std::vector<Dart>& walk, const std::vector<int>& orient) {
  const std::size_t k = walk.size();
  std::vector<Dart> rwalk(k);
  std::vector<int> rorient(k);
  for (std::size_t j = 0; j < k; ++j) {
    rwalk[j] = walk[k - 1 - j].reversed();
    rorient[j] = -orient[(k - j) % k];
  }
  std::vector<Dart> best_w;
  std::vector<int> best_o;
  bool have = false;
  for (int dir = 0; dir < 2; ++dir) {
    const auto& w = dir == 0 ? walk : rwalk;
    const auto& o = dir == 0 ? orient : rorient;
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Dart> cw(k);
      std::vector<int> co(k);
      for (std::size_t j = 0; j < k; ++j) {
        cw[j] = w[(s + j) % k];
        co[j] = o[(s + j) % k];
      }
      if (!have || std::tie(cw, co) < std::tie(best_w, best_o)) {
        best_w = std::move(cw);
        best_o = std::move(co);
        have = true;
      }
    }
  }
  return Face(std::move(best_w), std::move(best_o));
}

// Host edges lying in the corner of `face` at index i, in the corner's own
// rotational direction (from the incoming dart towards the outgoing one).
std::vector<VertexId> corner_sector(const Face& face, std::size_t i, const EmbeddedGraph& host) {
  const std::size_t k = face.size();
  const VertexId v = face.walk()[i].from;
  const VertexId u = face.walk()[(i + k - 1) % k].from;
  const VertexId w = face.walk()[i].to;
  const int o = face.orientation(i);
  const auto& rot = host.rotation(v);
  const std::size_t d = rot.size();
  std::size_t pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), u) - rot.begin());
  std::vector<VertexId> sector;
  for (std::size_t step = 1; step < d; ++step) {
    pos = o > 0 ? (pos + 1) % d : (pos + d - 1) % d;
    if (rot[pos] == w) return sector;
    sector.push_back(rot[pos]);
  }
  if (u == w) return sector;
  throw InternalError("corner sector at vertex " + vertex_name(v) + " does not close");
}

struct SectorOwner {
  std::size_t face = 0;
  std::size_t corner = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Face

Face::Face(std::vector<Dart> walk, std::vector<int> orientations)
    : walk_(std::move(walk)), orientations_(std::move(orientations)) {
  if (walk_.size() != orientations_.size()) throw PreconditionError("face walk and orientations differ in length");
  for (const Dart& d : walk_) {
    boundary_vertices_.push_back(d.from);
    boundary_edges_.push_back(Edge::of(d.from, d.to));
  }
  std::sort(boundary_vertices_.begin(), boundary_vertices_.end());
  boundary_vertices_.erase(std::unique(boundary_vertices_.begin(), boundary_vertices_.end()), boundary_vertices_.end());
  std::sort(boundary_edges_.begin(), boundary_edges_.end());
  boundary_edges_.erase(std::unique(boundary_edges_.begin(), boundary_edges_.end()), boundary_edges_.end());
}

std::vector<VertexId> Face::corner_vertices() const {
  std::vector<VertexId> out;
  out.reserve(walk_.size());
  for (const Dart& d : walk_) out.push_back(d.from);
  return out;
}

bool Face::contains_vertex(VertexId v) const {
  return std::binary_search(boundary_vertices_.begin(), boundary_vertices_.end(), v);
}

// ---------------------------------------------------------------------------
// EmbeddedGraph

EmbeddedGraph::EmbeddedGraph(Unchecked, int declared_genus, Rotation rotation, std::set<Edge> negative_edges)
    : declared_genus_(declared_genus), negative_edges_(std::move(negative_edges)) {
  vertices_.reserve(rotation.size());
  for (auto& [v, nbrs] : rotation) {
    vertices_.push_back(v);
    edge_count_ += nbrs.size();
    auto sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    sorted_neighbours_.push_back(std::move(sorted));
    rotation_.push_back(std::move(nbrs));
  }
  edge_count_ /= 2;
}

EmbeddedGraph::EmbeddedGraph(int declared_genus, Rotation rotation, std::set<Edge> negative_edges)
    : EmbeddedGraph(Unchecked{}, declared_genus, std::move(rotation), std::move(negative_edges)) {
  if (declared_genus_ < 0) throw PreconditionError("declared genus must be nonnegative");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const VertexId v = vertices_[i];
    const auto& sorted = sorted_neighbours_[i];
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("vertex " + vertex_name(v) + " lists a neighbour twice (parallel edge)");
    for (VertexId w : sorted) {
      if (w == v) throw PreconditionError("loop at vertex " + vertex_name(v));
      if (!contains(w))
        throw PreconditionError("vertex " + vertex_name(v) + " lists unknown neighbour " + vertex_name(w));
      if (!adjacent(w, v))
        throw PreconditionError("edge " + vertex_name(v) + "-" + vertex_name(w) + " missing from the rotation at " +
                                vertex_name(w));
    }
  }
  for (const Edge& e : negative_edges_) {
    if (e.u >= e.v || !contains(e.u) || !adjacent(e.u, e.v))
      throw PreconditionError("sign given for non-edge " + vertex_name(e.u) + "-" + vertex_name(e.v));
  }
  int total = 0;
  for (const auto& comp : connected_components(*this)) {
    if (comp.size() == vertices_.size()) {
      total += derived_genus(*this);
    } else {
      total += derived_genus(induced_subgraph(comp));
    }
  }
  if (total > declared_genus_) {
    throw PreconditionError("rotation system needs Euler genus " + std::to_string(total) +
                            " but only " + std::to_string(declared_genus_) + " is declared");
  }
}

EmbeddedGraph EmbeddedGraph::two_cell(Rotation rotation, std::set<Edge> negative_edges) {
  EmbeddedGraph g(std::numeric_limits<int>::max() / 2, std::move(rotation), std::move(negative_edges));
  int total = 0;
  for (const auto& comp : connected_components(g)) total += derived_genus(g.induced_subgraph(comp));
  g.declared_genus_ = total;
  return g;
}

std::size_t EmbeddedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw PreconditionError("unknown vertex " + vertex_name(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool EmbeddedGraph::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

const std::vector<VertexId>& EmbeddedGraph::rotation(VertexId v) const { return rotation_[index_of(v)]; }

bool EmbeddedGraph::adjacent(VertexId a, VertexId b) const {
  if (!contains(a)) return false;
  const auto& s = sorted_neighbours_[index_of(a)];
  return std::binary_search(s.begin(), s.end(), b);
}

int EmbeddedGraph::sign(VertexId a, VertexId b) const { return negative_edges_.contains(Edge::of(a, b)) ? -1 : 1; }

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (VertexId w : sorted_neighbours_[i]) {
      if (vertices_[i] < w) out.push_back({vertices_[i], w});
    }
  }
  return out;
}

EmbeddedGraph::Rotation EmbeddedGraph::rotation_map() const {
  Rotation out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.emplace(vertices_[i], rotation_[i]);
  return out;
}

VertexId EmbeddedGraph::max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }

EmbeddedGraph EmbeddedGraph::with_declared_genus(int genus) const {
  return EmbeddedGraph(genus, rotation_map(), negative_edges_);
}

EmbeddedGraph EmbeddedGraph::without_vertices(std::span<const VertexId> removed) const {
  std::set<VertexId> gone(removed.begin(), removed.end());
  Rotation rot;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (gone.contains(vertices_[i])) continue;
    std::vector<VertexId> kept;
    for (VertexId w : rotation_[i]) {
      if (!gone.contains(w)) kept.push_back(w);
    }
    rot.emplace(vertices_[i], std::move(kept));
  }
  std::set<Edge> neg;
  for (const Edge& e : negative_edges_) {
    if (!gone.contains(e.u) && !gone.contains(e.v)) neg.insert(e);
  }
  return EmbeddedGraph(Unchecked{}, declared_genus_, std::move(rot), std::move(neg));
}

EmbeddedGraph EmbeddedGraph::induced_subgraph(std::span<const VertexId> kept) const {
  std::set<VertexId> keep(kept.begin(), kept.end());
  std::vector<VertexId> removed;
  for (VertexId v : vertices_) {
    if (!keep.contains(v)) removed.push_back(v);
  }
  return without_vertices(removed);
}

EmbeddedGraph EmbeddedGraph::edge_subgraph(std::span<const Edge> kept) const {
  std::set<Edge> keep(kept.begin(), kept.end());
  Rotation rot;
  for (const Edge& e : keep) {
    if (!adjacent(e.u, e.v)) throw PreconditionError("edge_subgraph: not an edge");
    rot[e.u];
    rot[e.v];
  }
  for (auto& [v, nbrs] : rot) {
    for (VertexId w : rotation(v)) {
      if (keep.contains(Edge::of(v, w))) nbrs.push_back(w);
    }
  }
  std::set<Edge> neg;
  for (const Edge& e : negative_edges_) {
    if (keep.contains(e)) neg.insert(e);
  }
  return EmbeddedGraph(Unchecked{}, declared_genus_, std::move(rot), std::move(neg));
}

bool EmbeddedGraph::operator==(const EmbeddedGraph& other) const {
  return declared_genus_ == other.declared_genus_ && vertices_ == other.vertices_ && rotation_ == other.rotation_ &&
         negative_edges_ == other.negative_edges_;
}

// ---------------------------------------------------------------------------
// Faces and genus

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  StateSpace space(g);
  std::vector<char> seen(space.state_count(), 0);
  std::vector<Face> faces;
  for (std::size_t id = 0; id < space.state_count(); ++id) {
    if (seen[id]) continue;
    const auto start = space.decode(id);
    std::vector<Dart> walk;
    std::vector<int> orient;
    auto s = start;
    do {
      const std::size_t sid = space.encode(s.vertex, s.slot, s.orientation);
      if (seen[sid]) throw InternalError("face traversal revisited a state");
      seen[sid] = 1;
      walk.push_back({s.vertex, g.rotation(s.vertex)[s.slot]});
      orient.push_back(s.orientation);
      s = space.step(s);
    } while (s.vertex != start.vertex || s.slot != start.slot || s.orientation != start.orientation);

    // Mark the reverse traversal of the same face.
    const auto m0 = space.mirror(start);
    auto m = m0;
    do {
      const std::size_t mid = space.encode(m.vertex, m.slot, m.orientation);
      if (seen[mid]) throw InternalError("face walk is its own mirror");
      seen[mid] = 1;
      m = space.step(m);
    } while (m.vertex != m0.vertex || m.slot != m0.slot || m.orientation != m0.orientation);

    faces.push_back(canonical_face(walk, orient));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.walk(), a.orientations()) < std::tie(b.walk(), b.orientations());
  });
  return faces;
}

int derived_genus(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw PreconditionError("derived genus needs a connected graph");
  if (g.vertex_count() == 0) return 0;
  const auto v = static_cast<int>(g.vertex_count());
  const auto e = static_cast<int>(g.edge_count());
  const int f = e == 0 ? 1 : static_cast<int>(trace_faces(g).size());
  return 2 - v + e - f;
}

bool is_two_cell(const EmbeddedGraph& g) { return derived_genus(g) == g.declared_genus(); }

std::vector<std::vector<VertexId>> connected_components(const EmbeddedGraph& g) {
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.vertices()) {
    if (seen.contains(s)) continue;
    std::vector<VertexId> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.rotation(comp[i])) {
        if (seen.insert(w).second) comp.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const EmbeddedGraph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Regions and duplication

std::vector<FrameRegion> locate_regions(const EmbeddedGraph& frame, const EmbeddedGraph& host) {
  if (frame.edge_count() == 0) throw PreconditionError("frame needs at least one edge");
  const auto faces = trace_faces(frame);

  std::map<Dart, SectorOwner> owner;  // host edge-end at a frame vertex -> face corner
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    for (std::size_t c = 0; c < faces[fi].size(); ++c) {
      const VertexId v = faces[fi].walk()[c].from;
      for (VertexId s : corner_sector(faces[fi], c, host)) {
        if (frame.adjacent(v, s)) throw PreconditionError("frame rotation is not the restriction of the host rotation");
        owner[{v, s}] = {fi, c};
      }
    }
  }

  std::map<VertexId, std::size_t> region_of;
  for (const auto& [dart, own] : owner) {
    if (frame.contains(dart.to) || region_of.contains(dart.to)) continue;
    std::deque<VertexId> queue{dart.to};
    region_of[dart.to] = own.face;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : host.rotation(x)) {
        if (frame.contains(y)) continue;
        auto [it, fresh] = region_of.emplace(y, own.face);
        if (fresh) {
          queue.push_back(y);
        } else if (it->second != own.face) {
          throw InternalError("vertex " + vertex_name(y) + " reached from two frame faces");
        }
      }
    }
  }
  for (VertexId v : host.vertices()) {
    if (!frame.contains(v) && !region_of.contains(v))
      throw PreconditionError("host vertex " + vertex_name(v) + " is not connected to the frame");
  }

  std::vector<FrameRegion> regions(faces.size());
  std::vector<int> inner_vertices(faces.size(), 0), inner_edges(faces.size(), 0), inner_faces(faces.size(), 0);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) regions[fi].face = faces[fi];
  for (const auto& [v, fi] : region_of) {
    regions[fi].interior.push_back(v);
    ++inner_vertices[fi];
  }

  auto region_of_edge = [&](VertexId a, VertexId b) -> std::optional<std::size_t> {
    if (frame.adjacent(a, b)) return std::nullopt;
    if (auto it = region_of.find(a); it != region_of.end()) return it->second;
    if (auto it = region_of.find(b); it != region_of.end()) return it->second;
    return owner.at({a, b}).face;
  };
  for (const Edge& e : host.edges()) {
    if (auto r = region_of_edge(e.u, e.v)) ++inner_edges[*r];
  }
  for (const Face& hf : trace_faces(host)) {
    for (const Dart& d : hf.walk()) {
      if (auto r = region_of_edge(d.from, d.to)) {
        ++inner_faces[*r];
        break;
      }
    }
  }
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (inner_edges[fi] == 0) continue;  // the region is a single host face
    const int chi = inner_vertices[fi] - inner_edges[fi] + inner_faces[fi];
    regions[fi].region_genus = 1 - chi;
  }
  return regions;
}

FacePatch duplicate_boundary(const Face& face, const EmbeddedGraph& g) {
  if (!is_two_cell(g)) throw PreconditionError("embedding is not 2-cell, so its faces need not be disks");
  return duplicate_boundary(face, g, g);
}

FacePatch duplicate_boundary(const Face& face, const EmbeddedGraph& frame, const EmbeddedGraph& host) {
  const std::size_t k = face.size();
  if (k < 3) throw PreconditionError("face of size " + std::to_string(k) + " cannot bound a simple cycle");

  VertexId next_fresh = std::max(frame.max_vertex_id(), host.max_vertex_id()) + 1;
  std::vector<VertexId> copy(k);
  std::set<VertexId> used;
  FacePatch patch;
  patch.host_face = face;
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = face.walk()[i].from;
    copy[i] = used.insert(v).second ? v : next_fresh++;
    patch.attachment[copy[i]] = v;
  }
  patch.outer_cycle = copy;

  std::vector<std::vector<VertexId>> sectors(k);
  std::map<Dart, std::size_t> owner;
  for (std::size_t i = 0; i < k; ++i) {
    sectors[i] = corner_sector(face, i, host);
    for (VertexId s : sectors[i]) owner[{face.walk()[i].from, s}] = i;
  }

  // Orientation of each interior vertex relative to the face; flipping the
  // rotation where it is -1 makes every patch edge positive.
  std::map<VertexId, int> lambda;
  std::deque<VertexId> queue;
  auto inconsistent = [] { return PreconditionError("face region is not a disk (non-2-cell face)"); };
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = face.walk()[i].from;
    for (VertexId s : sectors[i]) {
      const int want = face.orientation(i) * host.sign(v, s);
      if (frame.contains(s)) {
        const std::size_t j = owner.at({s, v});
        if (want != face.orientation(j)) throw inconsistent();
        continue;
      }
      auto [it, fresh] = lambda.emplace(s, want);
      if (fresh) {
        queue.push_back(s);
      } else if (it->second != want) {
        throw inconsistent();
      }
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : host.rotation(x)) {
      if (frame.contains(y)) continue;
      const int want = lambda.at(x) * host.sign(x, y);
      auto [it, fresh] = lambda.emplace(y, want);
      if (fresh) {
        queue.push_back(y);
      } else if (it->second != want) {
        throw inconsistent();
      }
    }
  }

  auto map_end = [&](VertexId at, VertexId nbr) -> VertexId {
    // `at` is interior; nbr is interior or a frame vertex seen from `at`.
    if (!frame.contains(nbr)) return nbr;
    return copy[owner.at({nbr, at})];
  };

  EmbeddedGraph::Rotation rot;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<VertexId> r;
    r.push_back(copy[(i + k - 1) % k]);
    const VertexId v = face.walk()[i].from;
    for (VertexId s : sectors[i]) r.push_back(frame.contains(s) ? copy[owner.at({s, v})] : s);
    r.push_back(copy[(i + 1) % k]);
    rot.emplace(copy[i], std::move(r));
  }
  for (const auto& [x, lam] : lambda) {
    std::vector<VertexId> r;
    for (VertexId y : host.rotation(x)) r.push_back(map_end(x, y));
    if (lam < 0) std::reverse(r.begin(), r.end());
    rot.emplace(x, std::move(r));
  }

  EmbeddedGraph patch_graph;
  try {
    patch_graph = EmbeddedGraph(0, std::move(rot));
  } catch (const PreconditionError&) {
    throw inconsistent();
  }
  patch.patch_graph = std::move(patch_graph);
  return patch;
}

std::vector<VertexId> FacePatch::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : patch_graph.vertices()) {
    if (!on_boundary(v)) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances

namespace {

std::map<VertexId, int> bfs(const EmbeddedGraph& g, VertexId source) {
  std::map<VertexId, int> dist{{source, 0}};
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.rotation(x)) {
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

int graph_distance(const EmbeddedGraph& g, VertexId x, VertexId y) {
  if (!g.contains(x)) throw PreconditionError("unknown vertex " + vertex_name(x));
  if (!g.contains(y)) throw PreconditionError("unknown vertex " + vertex_name(y));
  const auto dist = bfs(g, x);
  auto it = dist.find(y);
  return it == dist.end() ? kInfiniteDistance : it->second;
}

ClosestPair closest_pair(const EmbeddedGraph& g, std::span<const VertexId> set) {
  if (set.empty()) throw PreconditionError("distance of an empty vertex set");
  std::vector<VertexId> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    if (!g.contains(v)) throw PreconditionError("unknown vertex " + vertex_name(v));
  }
  ClosestPair best;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto dist = bfs(g, sorted[i]);
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      auto it = dist.find(sorted[j]);
      const int d = it == dist.end() ? kInfiniteDistance : it->second;
      if (d < best.distance) best = {d, sorted[i], sorted[j]};
    }
  }
  return best;
}

int min_pairwise_distance(const EmbeddedGraph& g, std::span<const VertexId> set) {
  return closest_pair(g, set).distance;
}

// ---------------------------------------------------------------------------
// Growth

EmbeddedGraph add_vertex_in_face(const EmbeddedGraph& g, const Face& face, std::span<const std::size_t> corners,
                                 VertexId id) {
  if (g.contains(id)) throw PreconditionError("vertex " + vertex_name(id) + " already exists");
  if (corners.empty()) throw PreconditionError("new vertex needs at least one neighbour");
  std::vector<std::size_t> order(corners.begin(), corners.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end() || order.back() >= face.size())
    throw PreconditionError("invalid corner list");

  auto rot = g.rotation_map();
  auto neg = g.negative_edges();
  const std::size_t k = face.size();
  std::set<VertexId> targets;
  std::vector<VertexId> new_rotation;
  for (std::size_t c : order) {
    const VertexId v = face.walk()[c].from;
    if (!targets.insert(v).second) throw PreconditionError("two corners of vertex " + vertex_name(v) + " chosen");
    const VertexId u = face.walk()[(c + k - 1) % k].from;
    auto& r = rot.at(v);
    auto pos = std::find(r.begin(), r.end(), u);
    if (face.orientation(c) > 0) ++pos;
    r.insert(pos, id);
    if (face.orientation(c) < 0) neg.insert(Edge::of(v, id));
    new_rotation.push_back(v);
  }
  std::reverse(new_rotation.begin(), new_rotation.end());
  rot.emplace(id, std::move(new_rotation));
  return EmbeddedGraph(g.declared_genus(), std::move(rot), std::move(neg));
}

}  // namespace surfcolor
