#include "search.hpp"

#include <algorithm>

#include "surfcolor/errors.hpp"

namespace surfcolor::detail {

namespace {

// Each free vertex keeps its list and, per list entry, how many colored
// neighbours currently use that color. An entry is live while its count is 0.
class ForwardChecker {
 public:
  ForwardChecker(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& fixed) {
    for (VertexId v : g.vertices()) {
      if (fixed.contains(v)) continue;
      index_.emplace(v, ids_.size());
      ids_.push_back(v);
    }
    const std::size_t n = ids_.size();
    domain_.resize(n);
    blocked_.resize(n);
    live_.resize(n);
    nbrs_.resize(n);
    color_.assign(n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
      const VertexId v = ids_[i];
      if (!la.has(v)) throw PreconditionError("vertex " + std::to_string(v) + " has no list");
      domain_[i] = la.list(v);
      blocked_[i].assign(domain_[i].size(), 0);
      for (VertexId w : g.rotation(v)) {
        if (auto it = fixed.find(w); it != fixed.end()) {
          block(i, it->second, +1);
        } else {
          nbrs_[i].push_back(index_.at(w));
        }
      }
      live_[i] = static_cast<int>(std::count(blocked_[i].begin(), blocked_[i].end(), 0));
    }
  }

  std::optional<Coloring> solve() {
    for (int l : live_) {
      if (l == 0) return std::nullopt;
    }
    if (!descend(0)) return std::nullopt;
    Coloring out;
    for (std::size_t i = 0; i < ids_.size(); ++i) out[ids_[i]] = *color_[i];
    return out;
  }

 private:
  // Adjusts the count of color c at vertex i; returns false if i lost its last live color.
  bool block(std::size_t i, Color c, int delta) {
    auto it = std::lower_bound(domain_[i].begin(), domain_[i].end(), c);
    if (it == domain_[i].end() || *it != c) return true;
    int& b = blocked_[i][static_cast<std::size_t>(it - domain_[i].begin())];
    if (delta > 0 && b++ == 0) return --live_[i] > 0;
    if (delta < 0 && --b == 0) ++live_[i];
    return true;
  }

  std::optional<std::size_t> pick() const {
    std::optional<std::size_t> best;
    std::size_t best_free = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (color_[i]) continue;
      std::size_t free_nbrs = 0;
      for (std::size_t j : nbrs_[i]) free_nbrs += !color_[j];
      if (!best || live_[i] < live_[*best] || (live_[i] == live_[*best] && free_nbrs > best_free)) {
        best = i;
        best_free = free_nbrs;
      }
    }
    return best;
  }

  bool descend(std::size_t depth) {
    if (depth == ids_.size()) return true;
    const std::size_t i = *pick();
    for (std::size_t k = 0; k < domain_[i].size(); ++k) {
      if (blocked_[i][k] != 0) continue;
      const Color c = domain_[i][k];
      color_[i] = c;
      bool ok = true;
      std::vector<std::size_t> touched;
      for (std::size_t j : nbrs_[i]) {
        if (color_[j]) continue;
        touched.push_back(j);
        if (!block(j, c, +1)) {
          ok = false;
          break;
        }
      }
      if (ok && descend(depth + 1)) return true;
      for (std::size_t j : touched) block(j, c, -1);
      color_[i].reset();
    }
    return false;
  }

  std::map<VertexId, std::size_t> index_;
  std::vector<VertexId> ids_;
  std::vector<std::vector<Color>> domain_;
  std::vector<std::vector<int>> blocked_;
  std::vector<int> live_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<std::optional<Color>> color_;
};

}  // namespace

std::optional<Coloring> search_coloring(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& fixed) {
  for (const auto& [v, c] : fixed) {
    if (!g.contains(v)) throw PreconditionError("fixed vertex " + std::to_string(v) + " is not in the graph");
    for (VertexId w : g.rotation(v)) {
      if (auto it = fixed.find(w); it != fixed.end() && it->second == c) return std::nullopt;
    }
  }
  auto free = ForwardChecker(g, la, fixed).solve();
  if (!free) return std::nullopt;
  free->insert(fixed.begin(), fixed.end());
  return free;
}

std::vector<VertexId> precolored_in(const EmbeddedGraph& g, const ListAssignment& la) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (la.is_precolored(v)) out.push_back(v);
  }
  return out;
}

}  // namespace surfcolor::detail
