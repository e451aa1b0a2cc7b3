#include "curvelab/pants_graphs.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

using SlotUse = SurfaceIndex::SlotUse;

bool is_open(SlotUse use) { return use == SlotUse::Boundary || use == SlotUse::Frontier; }

// Bridges of the pants multigraph, indexed by curve. Parallel edges and
// self-loops are never bridges since the DFS skips only the tree edge's id.
std::vector<bool> bridge_curves(const SurfaceIndex& idx) {
  const auto& adj = idx.pants_adjacency();
  const int n = idx.pants_count();
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> bridge(idx.curve_count(), false);
  int clock = 0;

  std::function<void(int, int)> dfs = [&](int v, int via_curve) {
    order[v] = low[v] = clock++;
    for (const auto& e : adj[v]) {
      if (e.curve == via_curve) continue;
      if (order[e.to] >= 0) {
        low[v] = std::min(low[v], order[e.to]);
        continue;
      }
      dfs(e.to, e.curve);
      low[v] = std::min(low[v], low[e.to]);
      if (low[e.to] > order[v]) bridge[e.curve] = true;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (order[v] < 0) dfs(v, -1);
  }
  return bridge;
}

// A side of a bridge is a lone pants with two boundary slots when the
// other two slots of that pants are boundary or frontier.
bool lone_pants_side(const SurfaceIndex& idx, int pants, int curve) {
  int open = 0;
  bool skipped = false;
  for (const auto& occ : idx.slots(pants)) {
    if (!skipped && occ.use == SlotUse::Curve && occ.curve == curve) {
      skipped = true;
      continue;
    }
    if (is_open(occ.use)) ++open;
  }
  return open == 2;
}

CurveClass classify_with(const SurfaceIndex& idx, const std::vector<bool>& bridges, int c) {
  if (!bridges[c]) return CurveClass::Nonseparating;
  const auto [a, b] = idx.curve_pants(c);
  if (lone_pants_side(idx, a, c) || lone_pants_side(idx, b, c)) {
    return CurveClass::OuterSeparating;
  }
  return CurveClass::NonOuterSeparating;
}

}  // namespace

std::optional<int> AdjacencyGraph::index_of(std::string_view id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

AdjacencyGraph adjacency_graph(const GluingGraph& g) {
  require_valid(g);
  SurfaceIndex idx(g);
  AdjacencyGraph out;
  std::vector<int> vertex_of(idx.curve_count(), -1);
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (idx.is_frontier(c)) continue;
    vertex_of[c] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(idx.curve_id(c));
  }
  std::set<std::pair<int, int>> edges;
  for (int p = 0; p < idx.pants_count(); ++p) {
    const auto& slots = idx.slots(p);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (slots[i].use != SlotUse::Curve || slots[j].use != SlotUse::Curve) continue;
        const int u = vertex_of[slots[i].curve];
        const int v = vertex_of[slots[j].curve];
        if (u == v) continue;
        edges.insert({std::min(u, v), std::max(u, v)});
      }
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  out.neighbors.assign(out.vertices.size(), {});
  for (const auto& [u, v] : out.edges) {
    out.neighbors[u].push_back(v);
    out.neighbors[v].push_back(u);
  }
  for (auto& n : out.neighbors) std::sort(n.begin(), n.end());
  return out;
}

std::string_view to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Nonseparating: return "Nonseparating";
    case CurveClass::OuterSeparating: return "OuterSeparating";
    case CurveClass::NonOuterSeparating: return "NonOuterSeparating";
  }
  return "?";
}

CurveClass classify_curve(const GluingGraph& g, std::string_view curve) {
  require_valid(g);
  SurfaceIndex idx(g);
  const int c = idx.require_curve(curve);
  if (idx.is_frontier(c)) {
    throw Error("UnknownCurve", std::string(curve) + " is a frontier curve");
  }
  return classify_with(idx, bridge_curves(idx), c);
}

std::map<std::string, CurveClass> classify_all(const GluingGraph& g) {
  require_valid(g);
  SurfaceIndex idx(g);
  const auto bridges = bridge_curves(idx);
  std::map<std::string, CurveClass> out;
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (!idx.is_frontier(c)) out.emplace(idx.curve_id(c), classify_with(idx, bridges, c));
  }
  return out;
}

std::vector<std::string> cut_vertices(const AdjacencyGraph& a) {
  const int n = static_cast<int>(a.vertices.size());
  if (n == 0) return {};
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> cut(n, false);
  int clock = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    order[v] = low[v] = clock++;
    int children = 0;
    for (int w : a.neighbors[v]) {
      if (w == parent) continue;
      if (order[w] >= 0) {
        low[v] = std::min(low[v], order[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= order[v]) cut[v] = true;
    }
    if (parent < 0 && children > 1) cut[v] = true;
  };
  dfs(0, -1);
  if (clock != n) {
    throw Error("DisconnectedGraph", std::to_string(n - clock) + " vertices unreachable");
  }
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(a.vertices[v]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> peripheral_pairs(const GluingGraph& g) {
  require_valid(g);
  SurfaceIndex idx(g);
  const auto bridges = bridge_curves(idx);
  std::set<std::pair<int, int>> pairs;
  for (int p = 0; p < idx.pants_count(); ++p) {
    std::vector<int> curves;
    int boundary = 0;
    for (const auto& occ : idx.slots(p)) {
      if (occ.use == SlotUse::Curve) curves.push_back(occ.curve);
      if (occ.use == SlotUse::Boundary) ++boundary;
    }
    if (boundary != 1 || curves.size() != 2 || curves[0] == curves[1]) continue;
    if (bridges[curves[0]] || bridges[curves[1]]) continue;
    pairs.insert({std::min(curves[0], curves[1]), std::max(curves[0], curves[1])});
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : pairs) out.emplace_back(idx.curve_id(a), idx.curve_id(b));
  return out;
}

std::vector<DegreeViolation> outer_degree_check(const GluingGraph& g) {
  return outer_degree_check(adjacency_graph(g), classify_all(g));
}

std::vector<DegreeViolation> outer_degree_check(const AdjacencyGraph& a,
                                                const std::map<std::string, CurveClass>& classes) {
  std::vector<DegreeViolation> out;
  for (int v = 0; v < static_cast<int>(a.vertices.size()); ++v) {
    auto it = classes.find(a.vertices[v]);
    if (it == classes.end() || it->second != CurveClass::OuterSeparating) continue;
    if (a.degree(v) > 2) out.push_back(DegreeViolation{a.vertices[v], a.degree(v)});
  }
  return out;
}

GluingGraph random_gluing_graph(std::uint64_t seed, int max_pants) {
  if (max_pants < 1) throw Error("InvalidArgument", "max_pants must be >= 1");
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_pants)(rng);
  // Open slot count k has the parity of 3n so the rest pairs up.
  std::vector<int> open_choices;
  for (int k = 0; k <= 3; ++k) {
    if ((3 * n - k) % 2 == 0 && k <= 3 * n) open_choices.push_back(k);
  }

  for (;;) {
    const int open = open_choices[std::uniform_int_distribution<std::size_t>(
        0, open_choices.size() - 1)(rng)];
    std::vector<PantsSlot> slots;
    GluingGraph g;
    for (int p = 0; p < n; ++p) {
      g.pants.push_back("Q" + std::to_string(p));
      for (int s = 0; s < 3; ++s) slots.push_back(PantsSlot{g.pants.back(), s});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    int frontier = 0;
    for (int i = 0; i < open; ++i) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        const std::string id = "f" + std::to_string(frontier++);
        g.curves.push_back(Curve{id, {slots[i]}});
        g.frontier.push_back(id);
      } else {
        g.boundary.push_back(slots[i]);
      }
    }
    for (std::size_t i = open, k = 0; i + 1 < slots.size(); i += 2, ++k) {
      g.curves.push_back(Curve{"k" + std::to_string(k), {slots[i], slots[i + 1]}});
    }
    if (validate(g).empty()) return g;
  }
}

}  // namespace curvelab
