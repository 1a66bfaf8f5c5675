#pragma once

#include <map>
#include <set>
#include <vector>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

/// User colors are nonnegative; negative colors are reserved for colors the
/// library invents (see fresh_color).
using Color = int;

/// Total map vertex -> color.
using Coloring = std::map<VertexId, Color>;

/// Per-vertex color lists. Vertices with a 1-list form the precolored set P.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Lists are sorted and deduplicated; an empty list is rejected.
  explicit ListAssignment(std::map<VertexId, std::vector<Color>> lists);

  bool has(VertexId v) const { return lists_.contains(v); }
  const std::vector<Color>& list(VertexId v) const;
  std::size_t size_of(VertexId v) const { return list(v).size(); }
  bool allows(VertexId v, Color c) const;
  bool is_precolored(VertexId v) const { return has(v) && list(v).size() == 1; }
  std::vector<VertexId> precolored() const;
  const std::map<VertexId, std::vector<Color>>& lists() const { return lists_; }
  std::set<Color> palette() const;

  void set_list(VertexId v, std::vector<Color> colors);
  /// Removes c from v's list if present. Returns whether it was present.
  /// Throws if that would leave the list empty.
  bool remove_color(VertexId v, Color c);
  void add_color(VertexId v, Color c);
  void erase(VertexId v) { lists_.erase(v); }

  /// Lists restricted to the vertices of g.
  ListAssignment restricted_to(const EmbeddedGraph& g) const;

  bool operator==(const ListAssignment&) const = default;

 private:
  std::map<VertexId, std::vector<Color>> lists_;
};

/// Throws PreconditionError unless every vertex of g has a list.
void require_lists_cover(const EmbeddedGraph& g, const ListAssignment& la);

/// A negative color used by no list in la.
Color fresh_color(const ListAssignment& la);

}  // namespace surfcolor
