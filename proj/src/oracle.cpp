#include "surfcolor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "surfcolor/errors.hpp"

namespace surfcolor {

std::string ColoringReport::describe() const {
  std::ostringstream out;
  if (valid()) return "valid";
  for (VertexId v : list_violations) out << "vertex " << v << " uses a color outside its list; ";
  for (const Edge& e : edge_violations) out << "edge " << e.u << "-" << e.v << " is monochromatic; ";
  std::string s = out.str();
  s.resize(s.size() - 2);
  return s;
}

ColoringReport verify_coloring(const EmbeddedGraph& g, const ListAssignment& la, const Coloring& c) {
  for (VertexId v : g.vertices()) {
    if (!c.contains(v)) throw PreconditionError("coloring misses vertex " + std::to_string(v));
    if (!la.has(v)) throw PreconditionError("vertex " + std::to_string(v) + " has no list");
  }
  for (const auto& [v, col] : c) {
    if (!g.contains(v)) throw PreconditionError("coloring names vertex " + std::to_string(v) + " outside the graph");
  }
  ColoringReport report;
  for (VertexId v : g.vertices()) {
    if (!la.allows(v, c.at(v))) report.list_violations.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (c.at(e.u) == c.at(e.v)) report.edge_violations.push_back(e);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive list-coloring

namespace {

class Backtracker {
 public:
  Backtracker(const EmbeddedGraph& g, const ListAssignment& la) : ids_(g.vertices()) {
    const std::size_t n = ids_.size();
    adj_.resize(n);
    lists_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (VertexId w : g.rotation(ids_[i])) adj_[i].push_back(index(w));
      lists_[i] = la.list(ids_[i]);
    }
    color_.assign(n, 0);
    colored_.assign(n, false);
  }

  std::optional<Coloring> solve() {
    if (!search(0)) return std::nullopt;
    Coloring out;
    for (std::size_t i = 0; i < ids_.size(); ++i) out[ids_[i]] = color_[i];
    return out;
  }

 private:
  std::size_t index(VertexId v) const {
    return static_cast<std::size_t>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
  }

  std::vector<Color> available(std::size_t i) const {
    std::vector<Color> out;
    for (Color c : lists_[i]) {
      bool blocked = false;
      for (std::size_t j : adj_[i]) {
        if (colored_[j] && color_[j] == c) {
          blocked = true;
          break;
        }
      }
      if (!blocked) out.push_back(c);
    }
    return out;
  }

  std::size_t saturation(std::size_t i) const {
    std::set<Color> seen;
    for (std::size_t j : adj_[i]) {
      if (colored_[j]) seen.insert(color_[j]);
    }
    return seen.size();
  }

  // Fewest available colors first; ties go to the larger number of distinct
  // neighbour colors, then to the smaller id.
  bool search(std::size_t depth) {
    if (depth == ids_.size()) return true;
    std::size_t best = ids_.size();
    std::vector<Color> best_avail;
    std::size_t best_sat = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (colored_[i]) continue;
      auto avail = available(i);
      if (avail.empty()) return false;
      const std::size_t sat = saturation(i);
      if (best == ids_.size() || avail.size() < best_avail.size() ||
          (avail.size() == best_avail.size() && sat > best_sat)) {
        best = i;
        best_avail = std::move(avail);
        best_sat = sat;
      }
    }
    colored_[best] = true;
    for (Color c : best_avail) {
      color_[best] = c;
      if (search(depth + 1)) return true;
    }
    colored_[best] = false;
    return false;
  }

  std::vector<VertexId> ids_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<Color>> lists_;
  std::vector<Color> color_;
  std::vector<bool> colored_;
};

}  // namespace

std::optional<Coloring> brute_force_color(const EmbeddedGraph& g, const ListAssignment& la,
                                          const OracleOptions& options) {
  if (g.vertex_count() > options.vertex_cap) {
    throw PreconditionError("oracle vertex cap " + std::to_string(options.vertex_cap) + " exceeded by " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
  require_lists_cover(g, la);
  return Backtracker(g, la).solve();
}

// ---------------------------------------------------------------------------
// Cliques

std::optional<std::vector<VertexId>> find_clique(const EmbeddedGraph& g, int k) {
  if (k < 1) throw PreconditionError("clique size must be positive");
  std::vector<VertexId> current;
  std::function<bool(const std::vector<VertexId>&)> extend = [&](const std::vector<VertexId>& candidates) {
    if (static_cast<int>(current.size()) == k) return true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (static_cast<int>(current.size() + candidates.size() - i) < k) return false;
      const VertexId v = candidates[i];
      std::vector<VertexId> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      }
      current.push_back(v);
      if (extend(next)) return true;
      current.pop_back();
    }
    return false;
  };
  std::vector<VertexId> all;
  for (VertexId v : g.vertices()) {
    if (static_cast<int>(g.degree(v)) >= k - 1) all.push_back(v);
  }
  if (extend(all)) return current;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cycles and edge-width

namespace {

struct CutSides {
  // For cycle vertex i: neighbours strictly on the left, and on the right.
  std::vector<std::vector<VertexId>> left;
  std::vector<std::vector<VertexId>> right;
  std::vector<int> orientation;
};

// Walks the cycle carrying the local orientation and splits each rotation
// into the arc swept from the predecessor to the successor in the current
// direction (left) and the complementary arc (right).
CutSides split_rotations(const EmbeddedGraph& g, const std::vector<VertexId>& cycle) {
  const std::size_t L = cycle.size();
  CutSides sides;
  sides.left.resize(L);
  sides.right.resize(L);
  sides.orientation.resize(L);
  int o = 1;
  for (std::size_t i = 0; i < L; ++i) {
    if (i > 0) o *= g.sign(cycle[i - 1], cycle[i]);
    sides.orientation[i] = o;
    const VertexId prev = cycle[(i + L - 1) % L];
    const VertexId next = cycle[(i + 1) % L];
    const auto& rot = g.rotation(cycle[i]);
    const std::size_t d = rot.size();
    std::size_t pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), prev) - rot.begin());
    bool on_left = true;
    for (std::size_t step = 1; step < d; ++step) {
      pos = o > 0 ? (pos + 1) % d : (pos + d - 1) % d;
      if (rot[pos] == next) {
        on_left = false;
        continue;
      }
      (on_left ? sides.left : sides.right)[i].push_back(rot[pos]);
    }
  }
  return sides;
}

}  // namespace

CycleKind classify_cycle(const EmbeddedGraph& g, const std::vector<VertexId>& cycle) {
  const std::size_t L = cycle.size();
  if (L < 3) throw PreconditionError("a cycle needs at least three vertices");
  if (std::set<VertexId>(cycle.begin(), cycle.end()).size() != L) throw PreconditionError("cycle repeats a vertex");
  int product = 1;
  for (std::size_t i = 0; i < L; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % L])) throw PreconditionError("cycle uses a non-edge");
    product *= g.sign(cycle[i], cycle[(i + 1) % L]);
  }
  if (product < 0) return CycleKind::kOneSided;

  const auto sides = split_rotations(g, cycle);
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < L; ++i) pos[cycle[i]] = i;

  // Copies: left copy of cycle[i] keeps its id, right copy gets a fresh one.
  const VertexId base = g.max_vertex_id() + 1;
  auto left_id = [&](std::size_t i) { return cycle[i]; };
  auto right_id = [&](std::size_t i) { return base + static_cast<VertexId>(i); };
  auto side_of = [&](std::size_t i, VertexId w) {
    const auto& l = sides.left[i];
    return std::find(l.begin(), l.end(), w) != l.end();
  };
  // The copy of cycle vertex cycle[i] that its neighbour w attaches to.
  auto copy_for = [&](std::size_t i, VertexId w) { return side_of(i, w) ? left_id(i) : right_id(i); };

  EmbeddedGraph::Rotation rot;
  std::set<Edge> neg;
  for (VertexId v : g.vertices()) {
    if (pos.contains(v)) continue;
    std::vector<VertexId> r;
    for (VertexId w : g.rotation(v)) r.push_back(pos.contains(w) ? copy_for(pos.at(w), v) : w);
    rot[v] = std::move(r);
  }
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t ip = (i + L - 1) % L;
    const std::size_t in = (i + 1) % L;
    auto mapped = [&](VertexId w) { return pos.contains(w) ? copy_for(pos.at(w), cycle[i]) : w; };
    // Arcs in traversal direction; written in native order below.
    std::vector<VertexId> l{left_id(ip)};
    for (VertexId w : sides.left[i]) l.push_back(mapped(w));
    l.push_back(left_id(in));
    std::vector<VertexId> r{right_id(in)};
    for (VertexId w : sides.right[i]) r.push_back(mapped(w));
    r.push_back(right_id(ip));
    if (sides.orientation[i] < 0) {
      std::reverse(l.begin(), l.end());
      std::reverse(r.begin(), r.end());
    }
    rot[left_id(i)] = std::move(l);
    rot[right_id(i)] = std::move(r);
  }
  auto add_sign = [&](VertexId a, VertexId b, int s) {
    if (s < 0) neg.insert(Edge::of(a, b));
  };
  for (const Edge& e : g.edges()) {
    const int s = g.sign(e.u, e.v);
    const bool cu = pos.contains(e.u);
    const bool cv = pos.contains(e.v);
    if (!cu && !cv) {
      add_sign(e.u, e.v, s);
    } else if (cu && cv) {
      const std::size_t iu = pos.at(e.u);
      const std::size_t iv = pos.at(e.v);
      if ((iu + 1) % L == iv || (iv + 1) % L == iu) {
        add_sign(left_id(iu), left_id(iv), s);
        add_sign(right_id(iu), right_id(iv), s);
      } else {
        add_sign(copy_for(iu, e.v), copy_for(iv, e.u), s);
      }
    } else if (cu) {
      add_sign(copy_for(pos.at(e.u), e.v), e.v, s);
    } else {
      add_sign(e.u, copy_for(pos.at(e.v), e.u), s);
    }
  }

  const auto cut = EmbeddedGraph::two_cell(std::move(rot), std::move(neg));
  const auto comps = connected_components(cut);
  if (comps.size() == 1) return CycleKind::kNonseparating;
  for (const auto& comp : comps) {
    if (derived_genus(cut.induced_subgraph(comp)) == 0) return CycleKind::kContractible;
  }
  return CycleKind::kSeparatingNoncontractible;
}

int edge_width(const EmbeddedGraph& g, std::size_t max_length) {
  if (!is_connected(g)) throw PreconditionError("edge-width needs a connected graph");
  if (g.edge_count() + 1 <= g.vertex_count()) throw PreconditionError("edge-width of a forest is undefined");
  if (!is_two_cell(g)) throw PreconditionError("edge-width needs a 2-cell embedding");
  if (g.declared_genus() == 0) return kInfiniteDistance;

  const auto& vs = g.vertices();
  const std::size_t limit = max_length == 0 ? vs.size() : std::min(max_length, vs.size());
  std::vector<VertexId> path;
  std::set<VertexId> on_path;
  bool found = false;

  // Cycles whose least vertex is path[0], listed once per direction pair.
  std::function<void(std::size_t)> grow = [&](std::size_t target) {
    if (found) return;
    const VertexId last = path.back();
    if (path.size() == target) {
      if (g.adjacent(last, path.front()) && path[1] < last && classify_cycle(g, path) != CycleKind::kContractible)
        found = true;
      return;
    }
    for (VertexId w : g.rotation(last)) {
      if (w <= path.front() || on_path.contains(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      grow(target);
      on_path.erase(w);
      path.pop_back();
      if (found) return;
    }
  };
  for (std::size_t len = 3; len <= limit; ++len) {
    for (VertexId s : vs) {
      path = {s};
      on_path = {s};
      grow(len);
      if (found) return static_cast<int>(len);
    }
  }
  return kInfiniteDistance;
}

}  // namespace surfcolor
