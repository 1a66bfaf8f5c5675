#include "surfcolor/coloring.hpp"

#include <algorithm>
#include <string>

#include "surfcolor/errors.hpp"

namespace surfcolor {

namespace {

void normalise(std::vector<Color>& colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
}

}  // namespace

ListAssignment::ListAssignment(std::map<VertexId, std::vector<Color>> lists) {
  for (auto& [v, colors] : lists) set_list(v, std::move(colors));
}

const std::vector<Color>& ListAssignment::list(VertexId v) const {
  auto it = lists_.find(v);
  if (it == lists_.end()) throw PreconditionError("vertex " + std::to_string(v) + " has no list");
  return it->second;
}

bool ListAssignment::allows(VertexId v, Color c) const {
  auto it = lists_.find(v);
  return it != lists_.end() && std::binary_search(it->second.begin(), it->second.end(), c);
}

std::vector<VertexId> ListAssignment::precolored() const {
  std::vector<VertexId> out;
  for (const auto& [v, colors] : lists_) {
    if (colors.size() == 1) out.push_back(v);
  }
  return out;
}

std::set<Color> ListAssignment::palette() const {
  std::set<Color> out;
  for (const auto& [v, colors] : lists_) out.insert(colors.begin(), colors.end());
  return out;
}

void ListAssignment::set_list(VertexId v, std::vector<Color> colors) {
  normalise(colors);
  if (colors.empty()) throw PreconditionError("vertex " + std::to_string(v) + " has an empty list");
  lists_[v] = std::move(colors);
}

bool ListAssignment::remove_color(VertexId v, Color c) {
  auto& colors = lists_.at(v);
  auto it = std::lower_bound(colors.begin(), colors.end(), c);
  if (it == colors.end() || *it != c) return false;
  if (colors.size() == 1) throw PreconditionError("removing color " + std::to_string(c) + " empties the list of " + std::to_string(v));
  colors.erase(it);
  return true;
}

void ListAssignment::add_color(VertexId v, Color c) {
  auto& colors = lists_[v];
  auto it = std::lower_bound(colors.begin(), colors.end(), c);
  if (it == colors.end() || *it != c) colors.insert(it, c);
}

ListAssignment ListAssignment::restricted_to(const EmbeddedGraph& g) const {
  ListAssignment out;
  for (VertexId v : g.vertices()) {
    if (auto it = lists_.find(v); it != lists_.end()) out.lists_.emplace(v, it->second);
  }
  return out;
}

void require_lists_cover(const EmbeddedGraph& g, const ListAssignment& la) {
  for (VertexId v : g.vertices()) {
    if (!la.has(v)) throw PreconditionError("vertex " + std::to_string(v) + " has no list");
  }
}

Color fresh_color(const ListAssignment& la) {
  const auto palette = la.palette();
  const Color least = palette.empty() ? 0 : *palette.begin();
  return std::min(least, 0) - 1;
}

}  // namespace surfcolor
