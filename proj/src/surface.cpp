#include "curvelab/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

// Incremental construction: curves are created on first attach, and any curve
// left with a single end becomes a frontier curve.
class Assembler {
 public:
  void pants(std::string id) { g_.pants.push_back(std::move(id)); }

  void attach(const std::string& curve, const std::string& pants, int slot) {
    auto [it, inserted] = position_.try_emplace(curve, g_.curves.size());
    if (inserted) g_.curves.push_back(Curve{curve, {}});
    g_.curves[it->second].ends.push_back(PantsSlot{pants, slot});
  }

  void self_glue(const std::string& curve, const std::string& pants) {
    attach(curve, pants, 0);
    attach(curve, pants, 1);
  }

  void boundary(const std::string& pants, int slot) {
    g_.boundary.push_back(PantsSlot{pants, slot});
  }

  GluingGraph finish() && {
    for (const Curve& c : g_.curves) {
      if (c.ends.size() == 1) g_.frontier.push_back(c.id);
    }
    return std::move(g_);
  }

 private:
  GluingGraph g_;
  std::map<std::string, std::size_t> position_;
};

GluingGraph loch_ness(int depth) {
  Assembler a;
  a.pants("H1");
  a.self_glue("a1", "H1");
  a.attach("c1", "H1", 2);
  for (int k = 2; k <= depth; ++k) {
    const std::string s = "S" + std::to_string(k);
    const std::string h = "H" + std::to_string(k);
    const std::string leg = "l" + std::to_string(k);
    a.pants(s);
    a.attach("c" + std::to_string(k - 1), s, 0);
    a.attach("c" + std::to_string(k), s, 1);
    a.attach(leg, s, 2);
    a.pants(h);
    a.self_glue("a" + std::to_string(k), h);
    a.attach(leg, h, 2);
  }
  return std::move(a).finish();
}

GluingGraph ladder(int depth) {
  Assembler a;
  a.pants("C");
  a.attach("cr1", "C", 0);
  a.attach("cl1", "C", 1);
  a.attach("l0", "C", 2);
  a.pants("H0");
  a.self_glue("a0", "H0");
  a.attach("l0", "H0", 2);
  for (int k = 1; k < depth; ++k) {
    for (const char* side : {"r", "l"}) {
      std::string upper = side[0] == 'r' ? "R" : "L";
      const std::string n = std::to_string(k);
      const std::string s = "S" + upper + n;
      const std::string h = "H" + upper + n;
      const std::string leg = std::string("l") + side + n;
      a.pants(s);
      a.attach(std::string("c") + side + n, s, 0);
      a.attach(std::string("c") + side + std::to_string(k + 1), s, 1);
      a.attach(leg, s, 2);
      a.pants(h);
      a.self_glue(std::string("a") + side + n, h);
      a.attach(leg, h, 2);
    }
  }
  return std::move(a).finish();
}

GluingGraph cantor_tree(int depth) {
  Assembler a;
  a.pants("Br");
  a.attach("lr", "Br", 0);
  a.attach("or0", "Br", 1);
  a.attach("or1", "Br", 2);
  a.pants("Hr");
  a.self_glue("ar", "Hr");
  a.attach("lr", "Hr", 2);
  std::vector<std::string> level = {"r0", "r1"};
  for (int m = 1; m < depth; ++m) {
    std::vector<std::string> next;
    for (const std::string& w : level) {
      a.pants("S" + w);
      a.attach("o" + w, "S" + w, 0);
      a.attach("x" + w, "S" + w, 1);
      a.attach("l" + w, "S" + w, 2);
      a.pants("H" + w);
      a.self_glue("a" + w, "H" + w);
      a.attach("l" + w, "H" + w, 2);
      a.pants("B" + w);
      a.attach("x" + w, "B" + w, 0);
      a.attach("o" + w + "0", "B" + w, 1);
      a.attach("o" + w + "1", "B" + w, 2);
      next.push_back(w + "0");
      next.push_back(w + "1");
    }
    level = std::move(next);
  }
  return std::move(a).finish();
}

}  // namespace

std::string_view to_string(InfiniteModel model) {
  switch (model) {
    case InfiniteModel::LochNess: return "loch_ness";
    case InfiniteModel::Ladder: return "ladder";
    case InfiniteModel::CantorTree: return "cantor_tree";
  }
  return "?";
}

InfiniteModel parse_model(std::string_view name) {
  if (name == "loch_ness") return InfiniteModel::LochNess;
  if (name == "ladder") return InfiniteModel::Ladder;
  if (name == "cantor_tree") return InfiniteModel::CantorTree;
  throw Error("UnknownModel", std::string(name));
}

GluingGraph build_finite_surface(int genus, int boundary) {
  if (genus < 0 || boundary < 0) {
    throw Error("ComplexityTooLow", "negative genus or boundary count");
  }
  const int kappa = 3 * genus - 3 + boundary;
  if (kappa < 1) {
    throw Error("ComplexityTooLow", "3g - 3 + b = " + std::to_string(kappa));
  }

  // Leaves 0..g-1 are handle blocks, the rest are boundary components.
  Assembler a;
  const int leaves = genus + boundary;
  auto attach_leaf = [&](int leaf, const std::string& pants, int slot) {
    if (leaf < genus) {
      a.attach("e" + std::to_string(leaf), pants, slot);
    } else {
      a.boundary(pants, slot);
    }
  };

  if (leaves == 2) {
    // (2,0) or (1,1): handle blocks glued directly to each other.
    a.pants("T0");
    a.self_glue("h0", "T0");
    if (genus == 2) {
      a.attach("e0", "T0", 2);
      a.pants("T1");
      a.self_glue("h1", "T1");
      a.attach("e0", "T1", 2);
    } else {
      a.boundary("T0", 2);
    }
    return std::move(a).finish();
  }

  const int spine = leaves - 2;
  for (int k = 0; k < spine; ++k) a.pants("P" + std::to_string(k));
  for (int k = 0; k < spine; ++k) {
    const std::string p = "P" + std::to_string(k);
    if (k == 0) {
      attach_leaf(0, p, 0);
      attach_leaf(1, p, 1);
      if (spine == 1) {
        attach_leaf(2, p, 2);
      } else {
        a.attach("c0", p, 2);
      }
    } else if (k < spine - 1) {
      a.attach("c" + std::to_string(k - 1), p, 0);
      attach_leaf(k + 1, p, 1);
      a.attach("c" + std::to_string(k), p, 2);
    } else {
      a.attach("c" + std::to_string(k - 1), p, 0);
      attach_leaf(spine, p, 1);
      attach_leaf(spine + 1, p, 2);
    }
  }
  for (int i = 0; i < genus; ++i) {
    const std::string t = "T" + std::to_string(i);
    a.pants(t);
    a.self_glue("h" + std::to_string(i), t);
    a.attach("e" + std::to_string(i), t, 2);
  }
  return std::move(a).finish();
}

GluingGraph build_truncation(InfiniteModel model, int depth) {
  if (depth < 1) throw Error("InvalidDepth", "truncation depth must be >= 1");
  switch (model) {
    case InfiniteModel::LochNess: return loch_ness(depth);
    case InfiniteModel::Ladder: return ladder(depth);
    case InfiniteModel::CantorTree: return cantor_tree(depth);
  }
  throw Error("UnknownModel", "unhandled model");
}

SurfaceSignature signature(const GluingGraph& g) {
  require_valid(g);
  const int pants = static_cast<int>(g.pants.size());
  const int b = static_cast<int>(g.boundary.size() + g.frontier.size());
  const int twice_genus = pants + 2 - b;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error("NonIntegralGenus",
                "|pants| = " + std::to_string(pants) + ", b = " + std::to_string(b));
  }
  return SurfaceSignature{twice_genus / 2, b};
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SlotCountError: return "SlotCountError";
    case ViolationKind::ConnectivityError: return "ConnectivityError";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownPants: return "UnknownPants";
    case ViolationKind::FrontierError: return "FrontierError";
  }
  return "?";
}

std::vector<Violation> validate(const GluingGraph& g) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::string detail) {
    out.push_back(Violation{kind, std::move(detail)});
  };

  std::set<std::string> ids;
  std::map<std::string, int> pants_pos;
  for (const std::string& p : g.pants) {
    if (!ids.insert(p).second) report(ViolationKind::DuplicateId, "pants " + p);
    pants_pos.try_emplace(p, static_cast<int>(pants_pos.size()));
  }
  for (const Curve& c : g.curves) {
    if (!ids.insert(c.id).second) report(ViolationKind::DuplicateId, "curve " + c.id);
  }
  std::set<std::string> frontier;
  for (const std::string& f : g.frontier) {
    if (!frontier.insert(f).second) report(ViolationKind::DuplicateId, "frontier " + f);
  }

  std::map<PantsSlot, int> uses;
  auto use_slot = [&](const PantsSlot& s, const std::string& what) {
    if (!pants_pos.contains(s.pants)) {
      report(ViolationKind::UnknownPants, what + " references pants " + s.pants);
      return false;
    }
    if (s.slot < 0 || s.slot > 2) {
      report(ViolationKind::SlotCountError,
             what + " uses slot " + std::to_string(s.slot) + " of " + s.pants);
      return false;
    }
    ++uses[s];
    return true;
  };

  std::set<std::string> curve_ids;
  for (const Curve& c : g.curves) {
    curve_ids.insert(c.id);
    const bool is_frontier = frontier.contains(c.id);
    const std::size_t expected = is_frontier ? 1 : 2;
    if (c.ends.size() != expected) {
      report(ViolationKind::FrontierError,
             "curve " + c.id + " has " + std::to_string(c.ends.size()) + " ends, expected " +
                 std::to_string(expected));
    }
    for (const PantsSlot& s : c.ends) use_slot(s, "curve " + c.id);
  }
  for (const std::string& f : frontier) {
    if (!curve_ids.contains(f)) report(ViolationKind::FrontierError, "unknown frontier curve " + f);
  }
  for (const PantsSlot& s : g.boundary) use_slot(s, "boundary");

  std::map<std::string, int> per_pants;
  for (const auto& [slot, count] : uses) {
    per_pants[slot.pants] += count;
    if (count > 1) {
      report(ViolationKind::SlotCountError,
             "slot " + slot.pants + "/" + std::to_string(slot.slot) + " used " +
                 std::to_string(count) + " times");
    }
  }
  for (const auto& [p, _] : pants_pos) {
    const int n = per_pants.contains(p) ? per_pants[p] : 0;
    if (n != 3) {
      report(ViolationKind::SlotCountError,
             "pants " + p + " has " + std::to_string(n) + " slot usages");
    }
  }

  if (pants_pos.empty()) {
    report(ViolationKind::ConnectivityError, "no pants");
    return out;
  }
  std::vector<std::vector<int>> adj(pants_pos.size());
  for (const Curve& c : g.curves) {
    if (c.ends.size() != 2) continue;
    auto a = pants_pos.find(c.ends[0].pants);
    auto b = pants_pos.find(c.ends[1].pants);
    if (a == pants_pos.end() || b == pants_pos.end()) continue;
    adj[a->second].push_back(b->second);
    adj[b->second].push_back(a->second);
  }
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  if (reached != adj.size()) {
    report(ViolationKind::ConnectivityError,
           std::to_string(adj.size() - reached) + " pants unreachable from " + g.pants.front());
  }
  return out;
}

void require_valid(const GluingGraph& g) {
  const auto violations = validate(g);
  if (!violations.empty()) {
    throw Error("InvalidSurface", std::string(to_string(violations.front().kind)) + ": " +
                                      violations.front().detail);
  }
}

SurfaceIndex::SurfaceIndex(const GluingGraph& g)
    : graph_(&g),
      slots_(g.pants.size()),
      frontier_(g.curves.size(), false),
      curve_pants_(g.curves.size(), {-1, -1}),
      adjacency_(g.pants.size()) {
  for (int p = 0; p < pants_count(); ++p) pants_lookup_.emplace(g.pants[p], p);
  for (int c = 0; c < curve_count(); ++c) curve_lookup_.emplace(g.curves[c].id, c);
  for (const std::string& f : g.frontier) {
    if (auto c = curve_index(f)) frontier_[*c] = true;
  }
  for (int c = 0; c < curve_count(); ++c) {
    const auto& ends = g.curves[c].ends;
    const auto use = frontier_[c] ? SlotUse::Frontier : SlotUse::Curve;
    for (std::size_t e = 0; e < ends.size() && e < 2; ++e) {
      const int p = pants_lookup_.at(ends[e].pants);
      slots_[p][ends[e].slot] = Occupant{use, c};
      if (e == 0) {
        curve_pants_[c].first = p;
      } else {
        curve_pants_[c].second = p;
      }
    }
    if (!frontier_[c]) {
      const auto [a, b] = curve_pants_[c];
      adjacency_[a].push_back(Edge{b, c});
      if (a != b) adjacency_[b].push_back(Edge{a, c});
    }
  }
  for (const PantsSlot& s : g.boundary) {
    slots_[pants_lookup_.at(s.pants)][s.slot] = Occupant{SlotUse::Boundary, -1};
  }
}

std::optional<int> SurfaceIndex::pants_index(std::string_view id) const {
  auto it = pants_lookup_.find(std::string(id));
  if (it == pants_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SurfaceIndex::curve_index(std::string_view id) const {
  auto it = curve_lookup_.find(std::string(id));
  if (it == curve_lookup_.end()) return std::nullopt;
  return it->second;
}

int SurfaceIndex::require_curve(std::string_view id) const {
  if (auto c = curve_index(id)) return *c;
  throw Error("UnknownCurve", std::string(id));
}

int SurfaceIndex::require_pants(std::string_view id) const {
  if (auto p = pants_index(id)) return *p;
  throw Error("UnknownPants", std::string(id));
}

bool SurfaceIndex::is_self_glued(int curve) const {
  return !frontier_[curve] && curve_pants_[curve].first == curve_pants_[curve].second;
}

}  // namespace curvelab
