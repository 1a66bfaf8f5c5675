#pragma once

// Helpers shared by the unit tests. Everything here is written independently
// of the library's own algorithms so it can serve as a cross-check.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "surfcolor/embedding.hpp"
#include "surfcolor/io.hpp"

namespace testsupport {

using surfcolor::EmbeddedGraph;
using surfcolor::VertexId;

inline EmbeddedGraph load_fixture(const std::string& name) {
  return surfcolor::parse_graph(surfcolor::read_text_file(std::string(SURFCOLOR_FIXTURE_DIR) + "/" + name + ".graph"));
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
};

// Face count from the flag representation: a flag is (vertex, slot, side).
// Faces are the orbits of two involutions: crossing to the other end of the
// edge (side flips unless the edge is negative) and turning to the next slot
// around the vertex.
inline std::size_t flag_face_count(const EmbeddedGraph& g) {
  std::map<std::pair<VertexId, std::size_t>, std::size_t> base;
  std::size_t n = 0;
  for (VertexId v : g.vertices()) {
    for (std::size_t i = 0; i < g.degree(v); ++i) {
      base[{v, i}] = n;
      n += 2;
    }
  }
  auto flag = [&](VertexId v, std::size_t i, int side) { return base.at({v, i}) + (side > 0 ? 0 : 1); };
  DisjointSets ds(n);
  for (VertexId v : g.vertices()) {
    const auto& rot = g.rotation(v);
    const std::size_t d = rot.size();
    for (std::size_t i = 0; i < d; ++i) {
      ds.unite(flag(v, i, +1), flag(v, (i + 1) % d, -1));
      const VertexId w = rot[i];
      const auto& rw = g.rotation(w);
      const std::size_t j = static_cast<std::size_t>(std::find(rw.begin(), rw.end(), v) - rw.begin());
      const int s = g.sign(v, w);
      for (int side : {+1, -1}) ds.unite(flag(v, i, side), flag(w, j, -side * s));
    }
  }
  return ds.classes();
}

}  // namespace testsupport
