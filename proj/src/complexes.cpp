#include "curvelab/complexes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "curvelab/error.hpp"
#include "curvelab/pants_graphs.hpp"

namespace curvelab {

namespace {

bool overlaps(const std::vector<std::string>& a, const std::set<std::string>& b) {
  return std::any_of(a.begin(), a.end(), [&](const std::string& p) { return b.contains(p); });
}

}  // namespace

std::string_view to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Curve: return "c";
    case ComplexKind::Nonseparating: return "n";
    case ComplexKind::Schmutz: return "g";
  }
  return "?";
}

ComplexKind parse_complex_kind(std::string_view text) {
  if (text == "c") return ComplexKind::Curve;
  if (text == "n") return ComplexKind::Nonseparating;
  if (text == "g") return ComplexKind::Schmutz;
  throw Error("BadMode", "mode must be c, n or g, got " + std::string(text));
}

LocalCurveGraph local_graph(const GluingGraph& g, std::span<const CurveRef> inventory,
                            ComplexKind kind) {
  LocalCurveGraph out;
  out.kind = kind;
  for (const CurveRef& ref : inventory) {
    validate_ref(g, ref);
    if (kind != ComplexKind::Curve && !is_nonseparating(g, ref)) continue;
    if (std::find(out.vertices.begin(), out.vertices.end(), ref) != out.vertices.end()) continue;
    out.vertices.push_back(ref);
  }
  const std::int64_t wanted = kind == ComplexKind::Schmutz ? 1 : 0;
  const int n = static_cast<int>(out.vertices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Intersection x = global_intersection(g, out.vertices[i], out.vertices[j]);
      if (!x) {
        out.undefined_pairs.emplace_back(i, j);
      } else if (*x == wanted) {
        out.edges.emplace_back(i, j);
      }
    }
  }
  return out;
}

CurveRef disjointness_witness(const GluingGraph& g, const CurveRef& a, const CurveRef& b) {
  validate_ref(g, a);
  validate_ref(g, b);
  SurfaceIndex idx(g);
  std::set<std::string> used;
  for (const CurveRef* ref : {&a, &b}) {
    for (auto& p : support(g, *ref)) used.insert(std::move(p));
  }
  const auto classes = classify_all(g);
  std::vector<CurveRef> candidates;
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (idx.is_frontier(c)) continue;
    CurveRef w = CurveRef::pants(idx.curve_id(c));
    if (w == a || w == b || overlaps(support(g, w), used)) continue;
    candidates.push_back(std::move(w));
  }
  std::stable_partition(candidates.begin(), candidates.end(), [&](const CurveRef& w) {
    return classes.at(w.as_pants()->id) == CurveClass::Nonseparating;
  });
  for (const CurveRef& w : candidates) {
    if (global_intersection(g, w, a) == 0 && global_intersection(g, w, b) == 0) return w;
  }
  throw Error("NoRoom", "no pants curve off the supports of " + a.to_string() + " and " +
                            b.to_string() + "; deepen the truncation");
}

std::vector<CurveRef> schmutz_path(const GluingGraph& g, const CurveRef& h1, const CurveRef& h2) {
  const auto handles = handle_curves(g);
  auto handle_id = [&](const CurveRef& ref) {
    const auto* p = ref.as_pants();
    if (!p || std::find(handles.begin(), handles.end(), p->id) == handles.end()) {
      throw Error("NotHandle", ref.to_string() + " is not a handle curve");
    }
    return p->id;
  };
  const std::string a = handle_id(h1);
  const std::string b = handle_id(h2);
  if (a == b) return {h1};

  // Third handle minimizing the total chain length; ties go to curve order.
  std::optional<std::string> gamma;
  std::size_t best = 0;
  for (const auto& h : handles) {
    if (h == a || h == b) continue;
    const std::size_t len = shortest_dual_chain(g, a, h).as_chain()->path.size() +
                            shortest_dual_chain(g, h, b).as_chain()->path.size();
    if (!gamma || len < best) {
      gamma = h;
      best = len;
    }
  }
  if (!gamma) throw Error("NoRoom", "no third handle curve; deepen the truncation");

  std::vector<CurveRef> path = {h1, shortest_dual_chain(g, a, *gamma), CurveRef::pants(*gamma),
                                shortest_dual_chain(g, *gamma, b), h2};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (global_intersection(g, path[i], path[i + 1]) != 1) {
      throw Error("InvalidChain", "step " + path[i].to_string() + " -> " +
                                      path[i + 1].to_string() + " does not meet once");
    }
  }
  return path;
}

std::vector<CurveRef> standard_inventory(const GluingGraph& g, std::int64_t slope_bound,
                                         std::string_view skip_center) {
  require_valid(g);
  SurfaceIndex idx(g);
  std::vector<CurveRef> out;
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (!idx.is_frontier(c)) out.push_back(CurveRef::pants(idx.curve_id(c)));
  }

  WindowAtlas atlas(g);
  const auto handles = handle_curves(g);
  for (const auto& h : handles) atlas.add(h);
  for (int c = 0; c < idx.curve_count(); ++c) {
    if (idx.is_frontier(c) || idx.is_self_glued(c) || idx.curve_id(c) == skip_center) continue;
    try {
      atlas.add(idx.curve_id(c));
    } catch (const Error&) {
      // not a four-holed sphere, or overlaps a registered window
    }
  }
  const auto slopes = slopes_within(slope_bound);
  for (const Window& w : atlas.windows()) {
    if (w.center == skip_center) continue;
    for (const Slope& s : slopes) {
      if (s != Slope{}) out.push_back(CurveRef::window(w.center, s));
    }
  }

  for (std::size_t i = 0; i < handles.size(); ++i) {
    for (std::size_t j = i + 1; j < handles.size(); ++j) {
      out.push_back(shortest_dual_chain(g, handles[i], handles[j]));
    }
  }
  return out;
}

}  // namespace curvelab
