#pragma once

// Search used at the leaves of the constructive induction. Kept apart from the
// verification oracle so that the oracle stays an independent check.

#include <optional>

#include "surfcolor/coloring.hpp"
#include "surfcolor/embedding.hpp"

namespace surfcolor::detail {

/// Complete search with forward checking. Vertices in `fixed` keep their color
/// and need no list; every other vertex of g needs one.
std::optional<Coloring> search_coloring(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& fixed = {});

/// Vertices of g with a 1-list.
std::vector<VertexId> precolored_in(const EmbeddedGraph& g, const ListAssignment& la);

/// Color of a precolored vertex.
inline Color fixed_color(const ListAssignment& la, VertexId v) { return la.list(v).front(); }

}  // namespace surfcolor::detail
