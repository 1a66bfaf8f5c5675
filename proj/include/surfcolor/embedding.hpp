#pragma once

// Graphs embedded on surfaces, described by signed rotation systems.
//
// A rotation system fixes, for each vertex, the cyclic order of its incident
// edges. A sign of -1 on an edge means the local orientation flips when the
// edge is traversed (a crosscap on the way). Every signed rotation system of a
// connected graph describes a 2-cell embedding on a surface whose Euler genus
// follows from Euler's formula; we call that the derived genus.
//
// An EmbeddedGraph additionally carries a declared genus. When the declared
// genus exceeds the derived genus, the embedding is read as a non-2-cell
// embedding on the larger surface: the gap stands for handles or crosscaps
// sitting inside faces. This lets the coloring pipeline model non-2-cell
// embeddings without any extra topological data.

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace surfcolor {

using VertexId = int;

/// Distance reported between vertices in different components.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// An undirected edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// A directed edge-end: the walk leaves `from` along the edge to `to`.
struct Dart {
  VertexId from = 0;
  VertexId to = 0;

  Dart reversed() const { return {to, from}; }
  auto operator<=>(const Dart&) const = default;
};

/// One traced facial walk.
///
/// Corner i sits at walk()[i].from, entered from walk()[i-1] and left along
/// walk()[i]. orientation(i) is the local orientation (+1 or -1) the
/// traversal carries at that corner; it tells in which rotational direction
/// the face lies between the two darts of the corner.
class Face {
 public:
  Face() = default;
  Face(std::vector<Dart> walk, std::vector<int> orientations);

  const std::vector<Dart>& walk() const { return walk_; }
  const std::vector<int>& orientations() const { return orientations_; }
  int orientation(std::size_t corner) const { return orientations_[corner]; }

  /// s: number of edges on the walk, with multiplicity.
  std::size_t size() const { return walk_.size(); }
  /// t: number of distinct vertices on the walk.
  std::size_t vertex_region() const { return boundary_vertices_.size(); }

  const std::vector<VertexId>& boundary_vertices() const { return boundary_vertices_; }
  const std::vector<Edge>& boundary_edges() const { return boundary_edges_; }
  /// Vertex at each corner, in walk order (repeats included).
  std::vector<VertexId> corner_vertices() const;

  bool contains_vertex(VertexId v) const;

  bool operator==(const Face& other) const {
    return walk_ == other.walk_ && orientations_ == other.orientations_;
  }

 private:
  std::vector<Dart> walk_;
  std::vector<int> orientations_;
  std::vector<VertexId> boundary_vertices_;
  std::vector<Edge> boundary_edges_;
};

/// A simple graph with a signed rotation system and a declared Euler genus.
/// Immutable; every transformation returns a new graph.
class EmbeddedGraph {
 public:
  /// vertex -> neighbours in cyclic order.
  using Rotation = std::map<VertexId, std::vector<VertexId>>;

  EmbeddedGraph() = default;

  /// Validates the rotation (symmetric, simple, signs only on edges) and that
  /// the derived genus of every component sums to at most declared_genus.
  EmbeddedGraph(int declared_genus, Rotation rotation, std::set<Edge> negative_edges = {});

  /// Declares exactly the derived genus, i.e. a 2-cell embedding.
  static EmbeddedGraph two_cell(Rotation rotation, std::set<Edge> negative_edges = {});

  int declared_genus() const { return declared_genus_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(VertexId v) const;
  /// Neighbours of v in cyclic order.
  const std::vector<VertexId>& rotation(VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  /// +1 or -1; the edge must exist.
  int sign(VertexId a, VertexId b) const;

  std::vector<Edge> edges() const;
  const std::set<Edge>& negative_edges() const { return negative_edges_; }
  Rotation rotation_map() const;
  VertexId max_vertex_id() const;

  EmbeddedGraph with_declared_genus(int genus) const;
  /// Deletes the given vertices; the rotation of every survivor keeps its order.
  EmbeddedGraph without_vertices(std::span<const VertexId> removed) const;
  EmbeddedGraph induced_subgraph(std::span<const VertexId> kept) const;
  /// Keeps all endpoints of the given edges and only those edges.
  EmbeddedGraph edge_subgraph(std::span<const Edge> kept) const;

  bool operator==(const EmbeddedGraph& other) const;

 private:
  struct Unchecked {};
  EmbeddedGraph(Unchecked, int declared_genus, Rotation rotation, std::set<Edge> negative_edges);
  std::size_t index_of(VertexId v) const;

  int declared_genus_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<std::vector<VertexId>> sorted_neighbours_;
  std::set<Edge> negative_edges_;
  std::size_t edge_count_ = 0;
};

/// The closure of a face after vertex- and edge-duplication.
///
/// patch_graph is planar; outer_cycle lists its boundary in walk order and is a
/// simple cycle of length host_face.size(). The first copy of each host vertex
/// keeps its id; later copies get fresh ids above every host id. Interior
/// vertices keep their host ids.
struct FacePatch {
  Face host_face;
  EmbeddedGraph patch_graph;
  std::vector<VertexId> outer_cycle;
  /// Patch boundary vertex -> host vertex.
  std::map<VertexId, VertexId> attachment;

  std::vector<VertexId> interior_vertices() const;
  bool on_boundary(VertexId v) const { return attachment.contains(v); }
};

/// A face of a frame subgraph together with the host vertices drawn inside it.
struct FrameRegion {
  Face face;
  std::vector<VertexId> interior;
  /// Euler genus of the region; 0 iff the region is an open disk.
  int region_genus = 0;

  bool two_cell() const { return region_genus == 0; }
};

/// Every directed edge-end appears in exactly one walk. Faces are canonical:
/// each walk starts at its lexicographically least dart, and the list is sorted.
std::vector<Face> trace_faces(const EmbeddedGraph& g);

/// 2 - |V| + |E| - |F|. Throws PreconditionError when g is disconnected.
int derived_genus(const EmbeddedGraph& g);

/// True iff derived_genus(g) equals the declared genus.
bool is_two_cell(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);
std::vector<std::vector<VertexId>> connected_components(const EmbeddedGraph& g);

/// Splits repeated vertices and edges of a 2-cell face of g. g itself must be
/// 2-cell, so the patch has no interior.
FacePatch duplicate_boundary(const Face& face, const EmbeddedGraph& g);

/// Same, for a face of `frame`, a subgraph of `host` carrying the restricted
/// rotation. Host vertices drawn inside the face become the patch interior.
/// Throws PreconditionError if the region of the face is not a disk.
FacePatch duplicate_boundary(const Face& face, const EmbeddedGraph& frame, const EmbeddedGraph& host);

/// Faces of `frame` with the host vertices inside each and the region genus.
/// frame must be a connected subgraph of host with at least one edge, and every
/// host vertex must be connected to the frame.
std::vector<FrameRegion> locate_regions(const EmbeddedGraph& frame, const EmbeddedGraph& host);

/// BFS distance; kInfiniteDistance when x and y lie in different components.
int graph_distance(const EmbeddedGraph& g, VertexId x, VertexId y);

struct ClosestPair {
  int distance = kInfiniteDistance;
  VertexId first = 0;
  VertexId second = 0;
};

/// Least pairwise distance in `set` and a pair attaining it.
ClosestPair closest_pair(const EmbeddedGraph& g, std::span<const VertexId> set);

/// Least pairwise distance; kInfiniteDistance for a singleton.
int min_pairwise_distance(const EmbeddedGraph& g, std::span<const VertexId> set);

/// Adds vertex `id` inside `face`, joined to the corner vertices at the given
/// corner indices (which must name distinct vertices). The new faces are disks,
/// so the derived genus does not change.
EmbeddedGraph add_vertex_in_face(const EmbeddedGraph& g, const Face& face,
                                 std::span<const std::size_t> corners, VertexId id);

}  // namespace surfcolor
