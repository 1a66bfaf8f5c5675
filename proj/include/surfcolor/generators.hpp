#pragma once

// Instances: shipped embeddings of small complete graphs, the pendant
// construction showing that distance 3 between precolored vertices is not
// enough, K_{n+1} minus an edge, and seeded random instances for tests.

#include <cstdint>
#include <string>
#include <vector>

#include "surfcolor/coloring.hpp"
#include "surfcolor/embedding.hpp"
#include "surfcolor/engine.hpp"

namespace surfcolor {

/// Names of the embeddings shipped with the library.
std::vector<std::string> fixture_names();
/// Throws UnsupportedError for an unknown name.
EmbeddedGraph named_fixture(const std::string& name);

struct Fixture {
  std::string name;
  EmbeddedGraph graph;
  /// Least Euler genus of K_n, which the embedding attains.
  int genus = 0;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  /// Largest face of this particular embedding.
  std::size_t max_face_size = 0;
};

/// K_n on its genus surface for n in 5..7; n = 8 throws UnsupportedError.
Fixture complete_graph_fixture(int n);

struct Instance {
  EmbeddedGraph graph;
  ListAssignment lists;
};

struct SharpnessOptions {
  /// Edges between each clique vertex and its precolored vertex.
  int path_length = 1;
  /// Leave the precolored color off the clique lists.
  bool exclude_pendant_color = false;
};

/// K_{H(eps)} with a path to a vertex precolored 1 hanging off each clique
/// vertex. Clique lists are {1..H}. With the default options the result has
/// no coloring although the precolored vertices are at distance 3.
Instance sharpness_example(int eps, const SharpnessOptions& options = {});

/// K_{n+1} minus the edge between vertices n-1 and n; n >= 2.
DkGraph dk_graph(int n);

/// A clique fixture for eps in {1, 2}, grown to `budget` vertices by adding
/// vertices inside faces, with H(eps)-lists from a palette of H+2 colors and
/// precolored vertices pairwise at distance >= 4.
Instance random_theorem_instance(int eps, int budget, std::uint64_t seed);

struct PatchInstance {
  FacePatch patch;
  /// Keyed by host ids.
  Coloring boundary_coloring;
  ListAssignment lists;
};

/// A k-cycle with `interior` vertices added inside, lists of size l, some
/// precolored interior vertices and a proper boundary coloring. Lists are
/// adjusted so that no vertex has all its colors on boundary or precolored
/// neighbours.
PatchInstance random_patch_instance(int k, int l, int interior, std::uint64_t seed);

}  // namespace surfcolor
