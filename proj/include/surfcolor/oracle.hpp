#pragma once

// Exhaustive checks used to certify the constructive engine. Nothing here
// shares code with the engine beyond the embedding primitives.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surfcolor/coloring.hpp"
#include "surfcolor/embedding.hpp"

namespace surfcolor {

struct ColoringReport {
  /// Vertices whose color is not on their list.
  std::vector<VertexId> list_violations;
  /// Edges whose endpoints share a color.
  std::vector<Edge> edge_violations;

  bool valid() const { return list_violations.empty() && edge_violations.empty(); }
  std::string describe() const;
};

/// Throws PreconditionError when c misses a vertex of g or names a vertex
/// outside g, or when some vertex has no list.
ColoringReport verify_coloring(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& c);

struct OracleOptions {
  std::size_t vertex_cap = 40;
};

/// Complete backtracking search. std::nullopt means no list-coloring exists.
/// Throws PreconditionError above the vertex cap.
std::optional<Coloring> brute_force_color(const EmbeddedGraph& g, const ListAssignment& la,
                                          const OracleOptions& options = {});

/// The lexicographically least k-clique (as a sorted vertex list), if any.
std::optional<std::vector<VertexId>> find_clique(const EmbeddedGraph& g, int k);

enum class CycleKind { kContractible, kOneSided, kNonseparating, kSeparatingNoncontractible };

/// Classifies a simple cycle of a connected 2-cell embedded graph by cutting
/// the surface along it. `cycle` lists the vertices in order.
CycleKind classify_cycle(const EmbeddedGraph& g, const std::vector<VertexId>& cycle);

/// Length of a shortest noncontractible cycle; kInfiniteDistance when every
/// cycle is contractible. Cycles longer than max_length (0 = no limit) are not
/// examined. g must be connected, 2-cell, and contain a cycle.
int edge_width(const EmbeddedGraph& g, std::size_t max_length = 0);

}  // namespace surfcolor
