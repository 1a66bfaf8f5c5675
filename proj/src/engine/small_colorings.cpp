// Small explicit colorings: excision, cliques, and K_{n+1} minus an edge.

#include <algorithm>
#include <set>

#include "search.hpp"
#include "surfcolor/engine.hpp"
#include "surfcolor/errors.hpp"

namespace surfcolor {

namespace {

std::string name(VertexId v) { return std::to_string(v); }

// Greedy in the given order; each vertex takes its least color unused by the
// already colored vertices it is adjacent to.
bool greedy(const EmbeddedGraph& g, const std::vector<VertexId>& order,
            const std::map<VertexId, std::vector<Color>>& lists, Coloring& c) {
  for (VertexId v : order) {
    std::set<Color> used;
    for (VertexId w : g.rotation(v)) {
      if (auto it = c.find(w); it != c.end()) used.insert(it->second);
    }
    bool placed = false;
    for (Color col : lists.at(v)) {
      if (!used.contains(col)) {
        c[v] = col;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

std::vector<VertexId> by_list_size(std::vector<VertexId> vs, const std::map<VertexId, std::vector<Color>>& lists) {
  std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return lists.at(a).size() < lists.at(b).size(); });
  return vs;
}

std::vector<Color> without(const std::vector<Color>& l, Color c) {
  std::vector<Color> out;
  for (Color x : l) {
    if (x != c) out.push_back(x);
  }
  return out;
}

}  // namespace

Excision excise(const EmbeddedGraph& g, const ListAssignment& la, VertexId v) {
  if (!g.contains(v)) throw PreconditionError("excise: vertex " + name(v) + " is not in the graph");
  if (!la.is_precolored(v)) throw PreconditionError("excise: vertex " + name(v) + " is not precolored");
  const Color c = detail::fixed_color(la, v);
  ListAssignment out = la;
  for (VertexId w : g.rotation(v)) {
    if (!out.has(w) || out.is_precolored(w)) continue;
    out.remove_color(w, c);
  }
  out.erase(v);
  const VertexId gone[] = {v};
  return {g.without_vertices(gone), out};
}

Coloring color_clique_one_fixed(const EmbeddedGraph& g, std::span<const VertexId> clique, const ListAssignment& la,
                                std::optional<VertexId> outside) {
  const std::vector<VertexId> members(clique.begin(), clique.end());
  const std::size_t n = members.size();
  if (n == 0) throw PreconditionError("empty clique");
  for (std::size_t a = 0; a < n; ++a) {
    if (!la.has(members[a])) throw PreconditionError("clique vertex " + name(members[a]) + " has no list");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(members[a], members[b]))
        throw PreconditionError("vertices " + name(members[a]) + " and " + name(members[b]) + " are not adjacent");
    }
  }

  std::map<VertexId, std::vector<Color>> lists;
  for (VertexId v : members) lists[v] = la.list(v);
  Coloring c;
  if (outside) {
    if (std::find(members.begin(), members.end(), *outside) != members.end())
      throw PreconditionError("outside vertex " + name(*outside) + " lies in the clique");
    if (!la.is_precolored(*outside)) throw PreconditionError("outside vertex " + name(*outside) + " is not precolored");
    const Color oc = detail::fixed_color(la, *outside);
    c[*outside] = oc;
    for (VertexId v : members) {
      if (g.adjacent(v, *outside)) {
        if (lists[v].size() == 1 && lists[v].front() == oc)
          throw PreconditionError("precolored vertices " + name(v) + " and " + name(*outside) + " clash");
        if (lists[v].size() > 1) lists[v] = without(lists[v], oc);
      }
    }
  }

  std::size_t ones = 0;
  std::size_t full = 0;
  for (VertexId v : members) {
    const std::size_t s = lists[v].size();
    if (s == 1) {
      ++ones;
    } else if (s + 1 < n) {
      throw PreconditionError("clique vertex " + name(v) + " has " + std::to_string(s) + " usable colors, below " +
                              std::to_string(n - 1));
    }
    full += s >= n;
  }
  if (ones > 1) throw PreconditionError("more than one clique vertex has a 1-list");
  if (full == 0 && n > 1) throw PreconditionError("no clique vertex has " + std::to_string(n) + " usable colors");

  if (!greedy(g, by_list_size(members, lists), lists, c))
    throw InternalError("greedy clique coloring failed although the list sizes suffice");
  return c;
}

std::vector<VertexId> DkGraph::common() const {
  std::vector<VertexId> out;
  for (VertexId v : graph.vertices()) {
    if (v != x && v != y) out.push_back(v);
  }
  return out;
}

Coloring color_dk(const DkGraph& dk, const ListAssignment& la) {
  const EmbeddedGraph& g = dk.graph;
  const int n = dk.clique_size();
  const VertexId x = dk.x;
  const VertexId y = dk.y;
  const auto w = dk.common();
  if (n < 2 || !g.contains(x) || !g.contains(y) || x == y || g.adjacent(x, y))
    throw PreconditionError("color_dk: x and y must be distinct nonadjacent vertices");
  for (VertexId a : g.vertices()) {
    const std::size_t want = (a == x || a == y) ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
    if (g.degree(a) != want) throw PreconditionError("color_dk: graph is not K_{n+1} minus the edge xy");
  }
  require_lists_cover(g, la);

  std::map<VertexId, std::vector<Color>> lists;
  std::vector<VertexId> ones;
  std::size_t short_lists = 0;
  for (VertexId a : g.vertices()) {
    lists[a] = la.list(a);
    const auto s = static_cast<int>(lists[a].size());
    if (s == 1) ones.push_back(a);
    else if (s == n - 1) ++short_lists;
    else if (s < n) throw PreconditionError("color_dk: vertex " + name(a) + " has a list of size " + std::to_string(s));
  }

  Coloring c;
  auto finish = [&](const std::vector<VertexId>& order) {
    if (!greedy(g, order, lists, c)) throw InternalError("color_dk: greedy step failed");
  };

  if (ones.size() > 1) throw PreconditionError("color_dk: more than one 1-list");
  if (!ones.empty() || short_lists == 0) {
    if (short_lists > 0) throw PreconditionError("color_dk: a 1-list needs every other list of size n");
    // One vertex fixed, all others have n colors.
    std::vector<VertexId> order = ones;
    if (!ones.empty() && (ones[0] == x || ones[0] == y)) {
      for (VertexId a : w) order.push_back(a);
      order.push_back(ones[0] == x ? y : x);
    } else {
      for (VertexId a : w) {
        if (ones.empty() || a != ones[0]) order.push_back(a);
      }
      order.push_back(x);
      order.push_back(y);
    }
    finish(order);
    return c;
  }

  if (n < 7) throw PreconditionError("color_dk: lists of size n-1 need n >= 7");
  if (short_lists > 6) throw PreconditionError("color_dk: more than six lists of size n-1");

  const auto sx = static_cast<int>(lists[x].size());
  const auto sy = static_cast<int>(lists[y].size());
  if (sx >= n || sy >= n) {
    // Color the n-clique avoiding the roomy vertex, then that vertex sees only n-1 colors.
    const VertexId roomy = sx >= n ? x : y;
    std::vector<VertexId> rest = w;
    rest.push_back(roomy == x ? y : x);
    auto order = by_list_size(rest, lists);
    order.push_back(roomy);
    finish(order);
    return c;
  }

  std::vector<Color> shared;
  std::set_intersection(lists[x].begin(), lists[x].end(), lists[y].begin(), lists[y].end(), std::back_inserter(shared));
  if (!shared.empty()) {
    // x and y share a color; the common clique then loses at most that color.
    c[x] = c[y] = shared.front();
    for (VertexId a : w) lists[a] = without(lists[a], shared.front());
    finish(by_list_size(w, lists));
    return c;
  }

  // Disjoint lists on x and y: color the clique W + x, then place y.
  std::vector<VertexId> wx = w;
  wx.push_back(x);
  finish(by_list_size(wx, lists));
  const Color cx = c.at(x);
  std::set<Color> on_w;
  for (VertexId a : w) on_w.insert(c.at(a));
  for (Color col : lists[y]) {
    if (!on_w.contains(col)) {
      c[y] = col;
      return c;
    }
  }
  // Now the colors on W are exactly L(y).
  const std::set<Color> ly(lists[y].begin(), lists[y].end());
  for (VertexId z : w) {
    for (Color d : lists[z]) {
      if (!ly.contains(d) && d != cx) {
        c[y] = c.at(z);
        c[z] = d;
        return c;
      }
    }
  }
  // Every list on W lies within L(y) + c_x, so W avoids L(x) - c_x: move x
  // and hand c_x to a vertex of W.
  Color cx2 = cx;
  for (Color col : lists[x]) {
    if (col != cx && !on_w.contains(col)) {
      cx2 = col;
      break;
    }
  }
  if (cx2 == cx) throw InternalError("color_dk: no second color for x");
  for (VertexId z : w) {
    if (std::binary_search(lists[z].begin(), lists[z].end(), cx)) {
      c[x] = cx2;
      c[y] = c.at(z);
      c[z] = cx;
      return c;
    }
  }
  throw InternalError("color_dk: no vertex can take the color of x");
}

}  // namespace surfcolor
