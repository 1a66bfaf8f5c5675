#pragma once

// Constructive precoloring extension.
//
// extend_main colors a graph embedded on a surface of Euler genus eps >= 1
// when the precolored vertices P (1-lists) are pairwise at distance >= 4 and
// every other vertex has at least H(eps) colors. It works by induction: pick
// a copy K of K_{H(eps)}, color K together with the one precolored vertex that
// may touch it, and extend into the faces of K one at a time. Non-2-cell
// embeddings are first reduced to 2-cell ones by lowering the declared genus.
//
// The leaves of the induction (colorings whose existence is guaranteed by
// known theorems rather than by an explicit recipe) are solved by exhaustive
// search. A failed leaf is a bug and raises InternalError.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfcolor/coloring.hpp"
#include "surfcolor/embedding.hpp"

namespace surfcolor {

struct Excision {
  EmbeddedGraph graph;
  ListAssignment lists;
};

/// Deletes precolored v and removes its color from every neighbour that is not
/// itself precolored.
Excision excise(const EmbeddedGraph& g, const ListAssignment& la, VertexId v);

/// Colors a clique greedily: the 1-list vertex first, then by increasing list
/// size. If `outside` is given it must be precolored; its color is removed from
/// the lists of its clique neighbours first and it is included in the result.
/// Requires at most one 1-list, every other list of size >= n-1 and at least
/// one of size >= n, after that removal.
Coloring color_clique_one_fixed(const EmbeddedGraph& g, std::span<const VertexId> clique, const ListAssignment& la,
                                std::optional<VertexId> outside = std::nullopt);

/// K_{n+1} minus the edge xy.
struct DkGraph {
  EmbeddedGraph graph;
  VertexId x = 0;
  VertexId y = 0;

  /// n: the size of each of the two overlapping cliques.
  int clique_size() const { return static_cast<int>(graph.vertex_count()) - 1; }
  std::vector<VertexId> common() const;
};

/// Lists must satisfy one of: at most one 1-list and every other list of size
/// >= n; or n >= 7, no 1-list, at most six lists of size n-1 and the rest >= n.
Coloring color_dk(const DkGraph& dk, const ListAssignment& la);

/// Result of extending a boundary coloring into a face.
struct FaceExtension {
  enum class Status { kColored, kExceptional };
  Status status = Status::kColored;
  /// Colors of the interior vertices (host ids) when kColored.
  Coloring coloring;
  /// Interior vertex whose list is used up by its colored neighbours.
  VertexId exceptional_vertex = 0;

  bool colored() const { return status == Status::kColored; }
};

/// Extends a coloring of the face boundary (keyed by host ids) to the patch
/// interior. Let k be the face size and l the least list size over the
/// interior vertices that are not precolored. Supported regimes:
///   k = 3 and l >= 6;  4 <= k <= 6 and l >= k+2;  k = 6 and l = 7;
///   k >= 7 and l >= k+2;  k >= 9 and l = k+1.
/// Reads nothing outside the patch.
FaceExtension extend_into_face(const FacePatch& patch, const Coloring& boundary_coloring, const ListAssignment& la);

/// Colors a plane graph. With an empty outer cycle every list must have size
/// >= 5. Otherwise the outer cycle (length 3..6) must bound a face, carries
/// the given colors, and the remaining lists must have size >= max(5, k+1), or
/// size >= 6 with no vertex adjacent to the whole 6-cycle whose list lies
/// within the cycle's colors. Outer vertices need no list.
Coloring leaf_planar_solve(const EmbeddedGraph& plane, const ListAssignment& la,
                           std::span<const VertexId> outer_cycle = {}, const Coloring& outer_coloring = {});

enum class CutKind { kSeparatingTwoSided, kNonseparatingTwoSided, kNonseparatingOneSided };

struct SurgeryCut {
  /// Index into trace_faces(graph) of the face the cut lies in.
  std::size_t face_index = 0;
  CutKind kind = CutKind::kNonseparatingTwoSided;
  int genus_drop = 0;
};

struct SurgeryReport {
  std::vector<SurgeryCut> cuts;
  int genus_before = 0;
  int genus_after = 0;
  /// Faces of the resulting 2-cell embedding that absorbed a cut.
  std::vector<Face> derived_faces;
  /// genus_after - I(H(genus_before)).
  int n1 = 0;
  /// genus_before - genus_after.
  int n2 = 0;
};

struct Surgery {
  EmbeddedGraph graph;
  SurgeryReport report;
};

/// Lowers the declared genus of a connected non-2-cell embedding to its
/// derived genus. The rotation system is unchanged; the report accounts for
/// the cuts the lowering stands for.
Surgery surgery_to_two_cell(const EmbeddedGraph& g);

struct TraceStep {
  /// One of: excise, clique-color, face-extend, surgery, leaf-solve,
  /// dk-color, vertex-peel.
  std::string name;
  std::vector<VertexId> vertices;
  int genus_before = 0;
  int genus_after = 0;
  /// Colors fixed by this step; replaying the steps in order yields the
  /// final coloring.
  Coloring assigned;
  std::string note;
};

struct ExtensionTrace {
  std::vector<TraceStep> steps;

  Coloring replay() const;
  std::string to_json() const;
};

struct ExtensionResult {
  Coloring coloring;
  ExtensionTrace trace;
};

/// Requires declared genus eps >= 1, every vertex listed, dist(P) >= 4, and
/// every list outside P of size >= H(eps). Precondition errors name the
/// offending vertex or pair.
ExtensionResult extend_main(const EmbeddedGraph& g, const ListAssignment& la);

/// Same output for the wide regime: a 2-cell embedding of edge-width >= 4,
/// dist(P) >= 3 and lists of size >= H(eps) outside P.
ExtensionResult extend_wide(const EmbeddedGraph& g, const ListAssignment& la);

struct ApexReduction {
  EmbeddedGraph graph;
  ListAssignment lists;
  std::vector<VertexId> apexes;
  /// The shared color of the apexes; drawn from the reserved negative range.
  Color alpha = 0;
};

/// Adds one vertex per face, adjacent to every vertex of that face, precolored
/// with a fresh color alpha that is also appended to the face vertices' lists.
/// Faces must be faces of g, pairwise at distance >= 2. Face vertices need
/// lists of size >= H(eps)-1 and every other vertex lists of size >= H(eps).
ApexReduction reduce_face_lists(const EmbeddedGraph& g, std::span<const Face> faces, const ListAssignment& la);

/// Drops the apexes from a coloring of the reduced graph.
Coloring restrict_to_original(const ApexReduction& reduction, const Coloring& c);

}  // namespace surfcolor
