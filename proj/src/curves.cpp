#include "curvelab/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/pants_graphs.hpp"

namespace curvelab {

namespace {

using SlotUse = SurfaceIndex::SlotUse;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// 2x2 integer matrix acting on column vectors (p, q).
struct Unimodular {
  std::int64_t a, b, c, d;

  Slope apply(Slope s) const { return make_slope(a * s.p() + b * s.q(), c * s.p() + d * s.q()); }
  Unimodular inverse() const { return Unimodular{d, -b, -c, a}; }
};

// M with M * s = (0, 1).
Unimodular to_center_frame(Slope s) {
  // Extended Euclid: x * p + y * q = 1.
  std::int64_t old_r = s.p(), r = s.q();
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t k = floor_div(old_r, r);
    old_r -= k * r;
    std::swap(old_r, r);
    old_x -= k * x;
    std::swap(old_x, x);
    old_y -= k * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  return Unimodular{s.q(), -s.p(), old_x, old_y};
}

void require_torus(const Window& w) {
  if (w.kind != WindowKind::Torus) throw Error("NotTorusWindow", "window " + w.center + " is a sphere");
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool shares(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

int interior_curve(const SurfaceIndex& idx, std::string_view id) {
  const int c = idx.require_curve(id);
  if (idx.is_frontier(c)) throw Error("UnknownCurve", std::string(id) + " is a frontier curve");
  return c;
}

void validate_chain(const SurfaceIndex& idx, const DualChainRef& chain) {
  auto fail = [&](const std::string& why) {
    throw Error("InvalidChain", chain.from + "->" + chain.to + ": " + why);
  };
  const int from = interior_curve(idx, chain.from);
  const int to = interior_curve(idx, chain.to);
  if (!idx.is_self_glued(from) || !idx.is_self_glued(to)) fail("endpoints must be handle curves");
  if (from == to) fail("endpoints coincide");
  if (chain.path.empty()) fail("empty path");

  std::vector<int> seq = {from};
  for (const auto& id : chain.path) {
    const int c = interior_curve(idx, id);
    if (idx.is_self_glued(c)) fail("interior curve " + id + " is a handle");
    seq.push_back(c);
  }
  seq.push_back(to);
  if (std::set<int>(seq.begin(), seq.end()).size() != seq.size()) fail("path is not simple");

  auto pants_of = [&](int c) {
    const auto [a, b] = idx.curve_pants(c);
    return std::set<int>{a, b};
  };
  auto common = [&](int u, int v) {
    std::set<int> out;
    const auto pu = pants_of(u);
    for (int p : pants_of(v)) {
      if (pu.contains(p)) out.insert(p);
    }
    return out;
  };
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (common(seq[i], seq[i + 1]).empty()) {
      fail(idx.curve_id(seq[i]) + " and " + idx.curve_id(seq[i + 1]) + " are not adjacent");
    }
  }
  // Each interior curve must be entered from one of its pants and left
  // through the other.
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const auto [a, b] = idx.curve_pants(seq[i]);
    const auto in = common(seq[i - 1], seq[i]);
    const auto out = common(seq[i], seq[i + 1]);
    if (!((in.contains(a) && out.contains(b)) || (in.contains(b) && out.contains(a)))) {
      fail("path does not cross " + idx.curve_id(seq[i]));
    }
  }
}

// Outside-the-window connectivity decides whether a sphere window curve
// separates: it splits the four holes into two pairs.
bool sphere_curve_nonseparating(const GluingGraph& g, const Window& w, Slope s) {
  SurfaceIndex idx(g);
  const int x = idx.require_pants(w.support[0]);
  const int y = idx.require_pants(w.support[1]);
  std::vector<int> parent(idx.pants_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (idx.is_frontier(c)) continue;
    const auto [a, b] = idx.curve_pants(c);
    if (a == x || a == y || b == x || b == y) continue;
    parent[find(a)] = find(b);
  }
  // Component reached through each hole; -1 for boundary or frontier.
  std::vector<int> reach;
  for (const PantsSlot& hole : w.holes) {
    const auto& occ = idx.slots(idx.require_pants(hole.pants))[hole.slot];
    if (occ.use != SlotUse::Curve) {
      reach.push_back(-1);
      continue;
    }
    const auto [a, b] = idx.curve_pants(occ.curve);
    const int other = (a == x || a == y) ? b : a;
    reach.push_back(find(other));
  }
  std::array<int, 2> side_a{}, side_b{};
  const bool p_odd = s.p() % 2 != 0;
  const bool q_odd = s.q() % 2 != 0;
  if (!p_odd) {
    side_a = {0, 1};
    side_b = {2, 3};
  } else if (!q_odd) {
    side_a = {0, 2};
    side_b = {1, 3};
  } else {
    side_a = {0, 3};
    side_b = {1, 2};
  }
  for (int i : side_a) {
    for (int j : side_b) {
      if (reach[i] >= 0 && reach[i] == reach[j]) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(WindowKind kind) {
  return kind == WindowKind::Torus ? "torus" : "sphere";
}

Window torus_window() { return Window{WindowKind::Torus, {}, {}, {}}; }
Window sphere_window() { return Window{WindowKind::Sphere, {}, {}, {}}; }

Window make_window(const GluingGraph& g, std::string_view center) {
  require_valid(g);
  SurfaceIndex idx(g);
  const int c = interior_curve(idx, center);
  const auto [x, y] = idx.curve_pants(c);
  Window w;
  w.center = std::string(center);
  if (x == y) {
    w.kind = WindowKind::Torus;
    w.support = {idx.pants_id(x)};
    for (int s = 0; s < 3; ++s) {
      const auto& occ = idx.slots(x)[s];
      if (!(occ.use == SlotUse::Curve && occ.curve == c)) w.holes.push_back(PantsSlot{idx.pants_id(x), s});
    }
    return w;
  }
  w.kind = WindowKind::Sphere;
  w.support = {idx.pants_id(x), idx.pants_id(y)};
  std::map<int, int> curve_uses;
  for (int p : {x, y}) {
    for (int s = 0; s < 3; ++s) {
      const auto& occ = idx.slots(p)[s];
      if (occ.use == SlotUse::Curve && occ.curve == c) continue;
      w.holes.push_back(PantsSlot{idx.pants_id(p), s});
      if (occ.use == SlotUse::Curve) ++curve_uses[occ.curve];
    }
  }
  for (const auto& [curve, uses] : curve_uses) {
    if (uses > 1) {
      throw Error("InvalidWindow", "neighbourhood of " + std::string(center) +
                                       " is not a four-holed sphere (" + idx.curve_id(curve) +
                                       " bounds it twice)");
    }
  }
  return w;
}

const Window& WindowAtlas::add(std::string_view center) {
  if (const Window* w = find(center)) return *w;
  Window w = make_window(*graph_, center);
  for (const Window& other : windows_) {
    if (shares(other.support, w.support)) {
      throw Error("OverlappingWindow", w.center + " overlaps " + other.center);
    }
  }
  windows_.push_back(std::move(w));
  return windows_.back();
}

const Window* WindowAtlas::find(std::string_view center) const {
  for (const Window& w : windows_) {
    if (w.center == center) return &w;
  }
  return nullptr;
}

CurveRef CurveRef::pants(std::string id) { return CurveRef(PantsCurveRef{std::move(id)}); }

CurveRef CurveRef::window(std::string center, Slope slope) {
  if (slope == Slope{}) return pants(std::move(center));
  return CurveRef(WindowCurveRef{std::move(center), slope});
}

CurveRef CurveRef::chain(std::string from, std::string to, std::vector<std::string> path) {
  return CurveRef(DualChainRef{std::move(from), std::move(to), std::move(path)});
}

CurveRef CurveRef::parse(std::string_view text) {
  const auto parts = split(text, ':');
  auto bad = [&]() { return Error("BadRef", "cannot parse curve ref '" + std::string(text) + "'"); };
  if (parts.empty()) throw bad();
  for (const auto& part : parts) {
    if (part.empty()) throw bad();
  }
  if (parts[0] == "pants" && parts.size() == 2) return pants(parts[1]);
  if (parts[0] == "win" && parts.size() == 3) {
    try {
      return window(parts[1], parse_slope(parts[2]));
    } catch (const Error&) {
      throw bad();
    }
  }
  if (parts[0] == "chain" && parts.size() == 4) {
    auto path = split(parts[3], ',');
    for (const auto& id : path) {
      if (id.empty()) throw bad();
    }
    return chain(parts[1], parts[2], std::move(path));
  }
  throw bad();
}

std::string CurveRef::to_string() const {
  if (const auto* p = as_pants()) return "pants:" + p->id;
  if (const auto* w = as_window()) return "win:" + w->window + ":" + w->slope.to_string();
  const auto& c = *as_chain();
  std::string out = "chain:" + c.from + ":" + c.to + ":";
  for (std::size_t i = 0; i < c.path.size(); ++i) {
    if (i > 0) out += ",";
    out += c.path[i];
  }
  return out;
}

std::int64_t window_intersection(WindowKind kind, Slope a, Slope b) {
  const std::int64_t d = std::llabs(pairing(a, b));
  return kind == WindowKind::Torus ? d : 2 * d;
}

std::int64_t window_intersection(const Window& w, Slope a, Slope b) {
  return window_intersection(w.kind, a, b);
}

bool is_triple(const Window& w, Slope a, Slope b, Slope c) {
  require_torus(w);
  if (a == b || b == c || a == c) return false;
  return window_intersection(w, a, b) == 1 && window_intersection(w, b, c) == 1 &&
         window_intersection(w, a, c) == 1;
}

std::pair<Slope, Slope> triple_completion(const Window& w, Slope a, Slope b) {
  require_torus(w);
  const std::int64_t i_ab = window_intersection(w, a, b);
  if (i_ab <= 1) {
    throw Error("IntersectionTooSmall", "i(" + a.to_string() + ", " + b.to_string() +
                                            ") = " + std::to_string(i_ab));
  }
  // In the frame where a = (0,1), b = (p, q) with |p| = i(a, b) >= 2 and the
  // Farey neighbours (1, k), (1, k + 1) with k < q/p < k + 1 split i(a, b).
  const Unimodular m = to_center_frame(a);
  const Slope local = m.apply(b);
  const std::int64_t k = floor_div(local.q(), local.p());
  const Unimodular back = m.inverse();
  const Slope g = back.apply(make_slope(1, k));
  return {g, twist(w, a, g, +1)};
}

std::vector<Slope> sch04_common_neighbors(const Window& w, Slope a, Slope b,
                                          std::int64_t search_bound) {
  if (w.kind != WindowKind::Sphere) {
    throw Error("NotSphereWindow", "window " + w.center + " is a torus");
  }
  const std::int64_t i_ab = window_intersection(w, a, b);
  if (i_ab != 2) {
    throw Error("WrongIntersection", "i(" + a.to_string() + ", " + b.to_string() +
                                         ") = " + std::to_string(i_ab) + ", expected 2");
  }
  const std::int64_t needed = std::max(std::llabs(a.p()) + std::llabs(b.p()),
                                       std::llabs(a.q()) + std::llabs(b.q()));
  if (search_bound < needed) {
    throw Error("SearchBoundTooSmall", "bound " + std::to_string(search_bound) +
                                           " < coordinate sum " + std::to_string(needed));
  }
  // i = 2 in a sphere window means |det| = 1, which forces coprimality.
  std::vector<Slope> out;
  for (std::int64_t q = 0; q <= search_bound; ++q) {
    for (std::int64_t p = (q == 0 ? 1 : -search_bound); p <= (q == 0 ? 1 : search_bound); ++p) {
      const std::int64_t da = a.p() * q - a.q() * p;
      const std::int64_t db = b.p() * q - b.q() * p;
      if ((da == 1 || da == -1) && (db == 1 || db == -1)) out.push_back(make_slope(p, q));
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() != 2) {
    throw Error("CountAnomaly", "found " + std::to_string(out.size()) + " common neighbours of " +
                                    a.to_string() + " and " + b.to_string());
  }
  return out;
}

Slope twist(const Window& /*w*/, Slope along, Slope s, int direction) {
  const std::int64_t k = direction * pairing(s, along);
  return make_slope(s.p() + k * along.p(), s.q() + k * along.q());
}

void validate_ref(const GluingGraph& g, const CurveRef& ref) {
  require_valid(g);
  SurfaceIndex idx(g);
  if (const auto* p = ref.as_pants()) {
    interior_curve(idx, p->id);
  } else if (const auto* w = ref.as_window()) {
    make_window(g, w->window);
  } else {
    validate_chain(idx, *ref.as_chain());
  }
}

std::vector<std::string> support(const GluingGraph& g, const CurveRef& ref) {
  SurfaceIndex idx(g);
  std::vector<std::string> out;
  auto add_curve_pants = [&](std::string_view id) {
    const auto [a, b] = idx.curve_pants(idx.require_curve(id));
    for (int p : {a, b}) {
      if (p >= 0 && std::find(out.begin(), out.end(), idx.pants_id(p)) == out.end()) {
        out.push_back(idx.pants_id(p));
      }
    }
  };
  if (const auto* p = ref.as_pants()) {
    add_curve_pants(p->id);
  } else if (const auto* w = ref.as_window()) {
    out = make_window(g, w->window).support;
  } else {
    const auto& c = *ref.as_chain();
    add_curve_pants(c.from);
    for (const auto& id : c.path) add_curve_pants(id);
    add_curve_pants(c.to);
  }
  return out;
}

bool is_nonseparating(const GluingGraph& g, const CurveRef& ref) {
  validate_ref(g, ref);
  if (const auto* p = ref.as_pants()) return classify_curve(g, p->id) == CurveClass::Nonseparating;
  if (const auto* w = ref.as_window()) {
    const Window win = make_window(g, w->window);
    if (win.kind == WindowKind::Torus) return true;
    return sphere_curve_nonseparating(g, win, w->slope);
  }
  return true;  // meets its endpoint handles once
}

Intersection global_intersection(const GluingGraph& g, const CurveRef& a, const CurveRef& b) {
  validate_ref(g, a);
  validate_ref(g, b);
  if (a == b) return 0;

  const auto* pa = a.as_pants();
  const auto* pb = b.as_pants();
  const auto* wa = a.as_window();
  const auto* wb = b.as_window();
  const auto* ca = a.as_chain();
  const auto* cb = b.as_chain();

  if (pa && pb) return 0;
  if ((pa && wb) || (wa && pb)) {
    const auto& p = pa ? *pa : *pb;
    const auto& w = wa ? *wa : *wb;
    if (p.id != w.window) return 0;
    return window_intersection(make_window(g, w.window).kind, Slope{}, w.slope);
  }
  if (wa && wb) {
    if (wa->window == wb->window) {
      return window_intersection(make_window(g, wa->window).kind, wa->slope, wb->slope);
    }
    if (shares(support(g, a), support(g, b))) return std::nullopt;
    return 0;
  }
  if ((ca && pb) || (pa && cb)) {
    const auto& c = ca ? *ca : *cb;
    const auto& p = pa ? *pa : *pb;
    if (p.id == c.from || p.id == c.to) return 1;
    if (std::find(c.path.begin(), c.path.end(), p.id) != c.path.end()) return 2;
    return 0;
  }
  if ((ca && wb) || (wa && cb)) {
    if (shares(support(g, a), support(g, b))) return std::nullopt;
    return 0;
  }
  return std::nullopt;  // two distinct chains
}

std::vector<std::int64_t> DTVector::values() const {
  std::vector<std::int64_t> out;
  for (const auto& [_, v] : entries) out.push_back(v);
  return out;
}

DTVector dt_vector(const GluingGraph& g, const CurveRef& c, std::span<const CurveRef> coords) {
  DTVector out;
  for (const CurveRef& coord : coords) {
    const Intersection i = global_intersection(g, c, coord);
    if (!i) throw Error("UndefinedPair", c.to_string() + " vs " + coord.to_string());
    out.entries.emplace_back(coord, *i);
  }
  return out;
}

std::optional<std::pair<Slope, Slope>> dt_uniqueness_check(WindowKind kind, std::int64_t bound) {
  const std::array<Slope, 3> coords = {Slope{}, make_slope(1, 0), make_slope(1, 1)};
  std::map<std::array<std::int64_t, 3>, Slope> seen;
  for (const Slope& s : slopes_within(bound)) {
    std::array<std::int64_t, 3> key{};
    for (std::size_t i = 0; i < coords.size(); ++i) key[i] = window_intersection(kind, s, coords[i]);
    auto [it, inserted] = seen.emplace(key, s);
    if (!inserted) return std::make_pair(it->second, s);
  }
  return std::nullopt;
}

std::vector<std::string> handle_curves(const GluingGraph& g) {
  SurfaceIndex idx(g);
  std::vector<std::string> out;
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (idx.is_self_glued(c)) out.push_back(idx.curve_id(c));
  }
  return out;
}

CurveRef shortest_dual_chain(const GluingGraph& g, std::string_view from, std::string_view to) {
  const AdjacencyGraph a = adjacency_graph(g);
  const auto s = a.index_of(from);
  const auto t = a.index_of(to);
  if (!s || !t) throw Error("InvalidChain", "unknown handle curve");
  if (*s == *t) throw Error("InvalidChain", "endpoints coincide");
  std::vector<int> prev(a.vertices.size(), -2);
  std::queue<int> queue;
  prev[*s] = -1;
  queue.push(*s);
  while (!queue.empty() && prev[*t] == -2) {
    const int v = queue.front();
    queue.pop();
    for (int w : a.neighbors[v]) {
      if (prev[w] == -2) {
        prev[w] = v;
        queue.push(w);
      }
    }
  }
  if (prev[*t] == -2) throw Error("InvalidChain", "handles are not connected in A(P)");
  std::vector<std::string> path;
  for (int v = prev[*t]; v != *s; v = prev[v]) path.push_back(a.vertices[v]);
  std::reverse(path.begin(), path.end());
  CurveRef ref = CurveRef::chain(std::string(from), std::string(to), std::move(path));
  validate_ref(g, ref);
  return ref;
}

}  // namespace curvelab
