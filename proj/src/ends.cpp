#include "curvelab/ends.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/pants_graphs.hpp"

namespace curvelab {

namespace {

using SlotUse = SurfaceIndex::SlotUse;

std::vector<int> bfs_distances(const FramedGraph& graph, int base) {
  std::vector<int> dist(graph.size(), -1);
  std::queue<int> queue;
  dist[base] = 0;
  queue.push(base);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : graph.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool outside(const std::vector<int>& dist, int v, int radius) {
  return dist[v] < 0 || dist[v] > radius;
}

std::string canonical_form(const EndTree& t, int node) {
  std::vector<std::string> parts;
  for (int c : t.nodes[node].children) parts.push_back(canonical_form(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

// Pants reached from `start` without crossing `curve`.
std::vector<bool> side_of(const SurfaceIndex& idx, int start, int curve) {
  std::vector<bool> seen(idx.pants_count(), false);
  std::queue<int> queue;
  seen[start] = true;
  queue.push(start);
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop();
    for (const auto& e : idx.pants_adjacency()[p]) {
      if (e.curve == curve || seen[e.to]) continue;
      seen[e.to] = true;
      queue.push(e.to);
    }
  }
  return seen;
}

bool has_frontier_slot(const SurfaceIndex& idx, int pants) {
  for (const auto& occ : idx.slots(pants)) {
    if (occ.use == SlotUse::Frontier) return true;
  }
  return false;
}

std::set<int> frontier_curves_on(const SurfaceIndex& idx, const std::set<int>& pants) {
  std::set<int> out;
  for (int p : pants) {
    for (const auto& occ : idx.slots(p)) {
      if (occ.use == SlotUse::Frontier) out.insert(occ.curve);
    }
  }
  return out;
}

}  // namespace

int FramedGraph::require_vertex(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error("UnknownVertex", std::string(label));
  return static_cast<int>(it - labels.begin());
}

int ball_radius(int level, int stride) { return stride * (level - 1) + 1; }

EndTree end_tree(const FramedGraph& graph, int base, int depth, int stride) {
  if (depth < 1) throw Error("InvalidDepth", "end tree depth must be >= 1");
  if (stride < 1) throw Error("InvalidDepth", "stride must be >= 1");
  if (base < 0 || base >= graph.size()) throw Error("UnknownVertex", "base out of range");

  const auto dist = bfs_distances(graph, base);
  const int deepest = ball_radius(depth, stride);
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.frontier[v] && !outside(dist, v, deepest)) {
      throw Error("DepthExceedsTruncation",
                  "ball of radius " + std::to_string(deepest) + " reaches frontier at " +
                      graph.labels[v]);
    }
  }

  EndTree tree;
  tree.depth = depth;
  tree.stride = stride;
  EndTree::Node root;
  for (int v = 0; v < graph.size(); ++v) root.vertices.push_back(v);
  tree.nodes.push_back(std::move(root));
  tree.levels.push_back({0});

  std::vector<int> owner(graph.size(), 0);  // node containing v at the previous level
  for (int level = 1; level <= depth; ++level) {
    const int radius = ball_radius(level, stride);
    std::vector<int> component(graph.size(), -1);
    std::vector<int> next_owner(graph.size(), -1);
    tree.levels.emplace_back();
    for (int start = 0; start < graph.size(); ++start) {
      if (component[start] >= 0 || !outside(dist, start, radius)) continue;
      std::vector<int> members;
      bool live = false;
      std::queue<int> queue;
      component[start] = start;
      queue.push(start);
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        members.push_back(v);
        live = live || graph.frontier[v];
        for (int w : graph.adjacency[v]) {
          if (component[w] < 0 && outside(dist, w, radius)) {
            component[w] = start;
            queue.push(w);
          }
        }
      }
      if (!live) continue;
      std::sort(members.begin(), members.end());
      EndTree::Node node;
      node.level = level;
      node.parent = owner[members.front()];
      node.vertices = std::move(members);
      const int id = static_cast<int>(tree.nodes.size());
      for (int v : node.vertices) next_owner[v] = id;
      tree.nodes[node.parent].children.push_back(id);
      tree.levels.back().push_back(id);
      tree.nodes.push_back(std::move(node));
    }
    owner = std::move(next_owner);
  }
  return tree;
}

int max_end_depth(const FramedGraph& graph, int base, int stride) {
  const auto dist = bfs_distances(graph, base);
  int nearest = -1;
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.frontier[v] && dist[v] >= 0 && (nearest < 0 || dist[v] < nearest)) nearest = dist[v];
  }
  if (nearest < 2) return 0;
  return (nearest - 2) / stride + 1;
}

bool end_trees_isomorphic(const EndTree& a, const EndTree& b) {
  if (a.depth != b.depth) {
    throw Error("DepthMismatch",
                std::to_string(a.depth) + " vs " + std::to_string(b.depth));
  }
  return canonical_form(a, 0) == canonical_form(b, 0);
}

FramedGraph pants_framed_graph(const GluingGraph& g) {
  require_valid(g);
  SurfaceIndex idx(g);
  FramedGraph out;
  out.labels = g.pants;
  out.adjacency.resize(idx.pants_count());
  out.frontier.assign(idx.pants_count(), false);
  for (int p = 0; p < idx.pants_count(); ++p) {
    std::set<int> seen;
    for (const auto& e : idx.pants_adjacency()[p]) {
      if (e.to != p && seen.insert(e.to).second) out.adjacency[p].push_back(e.to);
    }
    out.frontier[p] = has_frontier_slot(idx, p);
  }
  return out;
}

FramedGraph adjacency_framed_graph(const GluingGraph& g) {
  const AdjacencyGraph a = adjacency_graph(g);
  SurfaceIndex idx(g);
  FramedGraph out;
  out.labels = a.vertices;
  out.adjacency = a.neighbors;
  out.frontier.assign(a.vertices.size(), false);
  for (int p = 0; p < idx.pants_count(); ++p) {
    if (!has_frontier_slot(idx, p)) continue;
    for (const auto& occ : idx.slots(p)) {
      if (occ.use == SlotUse::Curve) out.frontier[*a.index_of(idx.curve_id(occ.curve))] = true;
    }
  }
  return out;
}

EndTree surface_end_tree(const GluingGraph& g, std::string_view base_pants, int depth, int stride) {
  const FramedGraph graph = pants_framed_graph(g);
  return end_tree(graph, graph.require_vertex(base_pants), depth, stride);
}

EndTree adjacency_end_tree(const GluingGraph& g, std::string_view base_curve, int depth,
                           int stride) {
  const FramedGraph graph = adjacency_framed_graph(g);
  return end_tree(graph, graph.require_vertex(base_curve), depth, stride);
}

std::string adjacency_base_for(const GluingGraph& g, std::string_view pants) {
  require_valid(g);
  SurfaceIndex idx(g);
  const int p = idx.require_pants(pants);
  std::vector<int> interior;
  for (const auto& occ : idx.slots(p)) {
    if (occ.use == SlotUse::Curve) interior.push_back(occ.curve);
  }
  if (interior.empty()) throw Error("UnknownCurve", "pants " + std::string(pants) + " has no interior curve");
  for (int c : interior) {
    if (idx.is_self_glued(c)) return idx.curve_id(c);
  }
  for (int c : interior) {
    const auto [a, b] = idx.curve_pants(c);
    const int other = a == p ? b : a;
    const auto side = side_of(idx, other, c);
    if (side[p]) continue;
    bool frontier = false;
    for (int q = 0; q < idx.pants_count(); ++q) frontier = frontier || (side[q] && has_frontier_slot(idx, q));
    if (!frontier) return idx.curve_id(c);
  }
  return idx.curve_id(interior.front());
}

EndCorrespondence induced_end_correspondence(const GluingGraph& g, std::string_view base_pants,
                                             int depth, int stride) {
  EndCorrespondence out;
  out.surface_tree = surface_end_tree(g, base_pants, depth, stride);
  out.adjacency_tree = adjacency_end_tree(g, adjacency_base_for(g, base_pants), depth, stride);

  SurfaceIndex idx(g);
  const AdjacencyGraph a = adjacency_graph(g);
  auto fail = [](const std::string& detail) { throw Error("BijectionFailure", detail); };

  const EndTree& ta = out.adjacency_tree;
  const EndTree& ts = out.surface_tree;
  // Node maps of the previous level, for the parent check. Roots correspond.
  std::map<int, int> previous = {{0, 0}};
  out.pairs.push_back({{0, 0}});
  for (int level = 1; level <= depth; ++level) {
    std::map<int, int> pants_node;
    for (int s : ts.levels[level]) {
      for (int p : ts.nodes[s].vertices) pants_node[p] = s;
    }
    std::map<int, int> mapping;
    std::set<int> hit;
    for (int n : ta.levels[level]) {
      std::set<int> touched;
      for (int v : ta.nodes[n].vertices) {
        const auto [x, y] = idx.curve_pants(*idx.curve_index(a.vertices[v]));
        touched.insert(x);
        if (y >= 0) touched.insert(y);
      }
      std::set<int> targets;
      for (int p : touched) {
        if (auto it = pants_node.find(p); it != pants_node.end()) targets.insert(it->second);
      }
      if (targets.size() != 1) {
        fail("level " + std::to_string(level) + ": adjacency component touches " +
             std::to_string(targets.size()) + " live pants components");
      }
      const int s = *targets.begin();
      if (!hit.insert(s).second) fail("level " + std::to_string(level) + ": not injective");
      if (previous.at(ta.nodes[n].parent) != ts.nodes[s].parent) {
        fail("level " + std::to_string(level) + ": parent relation not preserved");
      }
      std::set<int> surface_pants(ts.nodes[s].vertices.begin(), ts.nodes[s].vertices.end());
      if (frontier_curves_on(idx, touched) != frontier_curves_on(idx, surface_pants)) {
        fail("level " + std::to_string(level) + ": matched components reach different frontiers");
      }
      mapping[n] = s;
    }
    if (hit.size() != ts.levels[level].size()) {
      fail("level " + std::to_string(level) + ": not surjective (" + std::to_string(hit.size()) +
           " of " + std::to_string(ts.levels[level].size()) + ")");
    }
    out.pairs.emplace_back(mapping.begin(), mapping.end());
    previous = std::move(mapping);
  }
  return out;
}

int required_truncation_depth(InfiniteModel model, int end_depth, int stride) {
  for (int d = 1; d <= 64; ++d) {
    const GluingGraph g = build_truncation(model, d);
    const FramedGraph pants = pants_framed_graph(g);
    const FramedGraph adj = adjacency_framed_graph(g);
    const int base_curve = adj.require_vertex(adjacency_base_for(g, g.pants.front()));
    if (max_end_depth(pants, 0, stride) >= end_depth &&
        max_end_depth(adj, base_curve, stride) >= end_depth) {
      return d;
    }
  }
  throw Error("DepthExceedsTruncation", "no truncation up to depth 64 suffices");
}

}  // namespace curvelab
