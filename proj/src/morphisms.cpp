#include "curvelab/morphisms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "curvelab/complexes.hpp"
#include "curvelab/ends.hpp"
#include "curvelab/error.hpp"
#include "curvelab/pants_graphs.hpp"
#include "curvelab/parallel.hpp"

namespace curvelab {

namespace {

// Curve identifiers a ref is built from.
std::set<std::string> identifiers(const CurveRef& ref) {
  if (const auto* p = ref.as_pants()) return {p->id};
  if (const auto* w = ref.as_window()) return {w->window};
  const auto& c = *ref.as_chain();
  std::set<std::string> out(c.path.begin(), c.path.end());
  out.insert(c.from);
  out.insert(c.to);
  return out;
}

// Accumulates pants and curves, creating a curve on its first attachment.
class Splicer {
 public:
  explicit Splicer(GluingGraph& g) : g_(g) {
    for (std::size_t i = 0; i < g_.curves.size(); ++i) index_[g_.curves[i].id] = i;
  }

  void add_pants(const std::string& id, const std::array<std::string, 3>& slots) {
    g_.pants.push_back(id);
    for (int s = 0; s < 3; ++s) attach(slots[s], id, s);
  }

  void attach(const std::string& curve, const std::string& pants, int slot) {
    auto it = index_.find(curve);
    if (it == index_.end()) {
      it = index_.emplace(curve, g_.curves.size()).first;
      g_.curves.push_back(Curve{curve, {}});
    }
    g_.curves[it->second].ends.push_back(PantsSlot{pants, slot});
  }

  // Handle blocks S_k = (c_{k-1}, c_k, l_k), H_k = (a_k, a_k, l_k) with
  // c_0 = start; c_depth becomes frontier. Returns the first handle curve.
  std::string arm(const std::string& prefix, const std::string& start, int depth) {
    std::string previous = start;
    std::string first_handle;
    for (int k = 1; k <= depth; ++k) {
      const std::string n = std::to_string(k);
      const std::string next = prefix + "c" + n;
      const std::string leg = prefix + "l" + n;
      const std::string handle = prefix + "a" + n;
      add_pants(prefix + "S" + n, {previous, next, leg});
      add_pants(prefix + "H" + n, {handle, handle, leg});
      if (first_handle.empty()) first_handle = handle;
      previous = next;
    }
    g_.frontier.push_back(previous);
    return first_handle;
  }

 private:
  GluingGraph& g_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

VertexMap::VertexMap(std::shared_ptr<const GluingGraph> source,
                     std::shared_ptr<const GluingGraph> target, std::vector<Entry> entries,
                     std::string note)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)),
      note_(std::move(note)) {
  std::set<CurveRef> domain;
  std::set<CurveRef> image;
  for (const auto& [from, to] : entries_) {
    validate_ref(*source_, from);
    validate_ref(*target_, to);
    if (!domain.insert(from).second) {
      throw Error("NotInjective", from.to_string() + " is listed twice");
    }
    if (!image.insert(to).second) {
      throw Error("NotInjective", to.to_string() + " has two preimages");
    }
  }
}

bool VertexMap::in_domain(const CurveRef& ref) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == ref; });
}

bool VertexMap::in_image(const CurveRef& ref) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.second == ref; });
}

const CurveRef& VertexMap::operator()(const CurveRef& ref) const {
  for (const auto& [from, to] : entries_) {
    if (from == ref) return to;
  }
  throw Error("NotInDomain", ref.to_string());
}

SuperinjectivityReport check_superinjective(const VertexMap& m, std::span<const RefPair> pairs) {
  struct Outcome {
    Intersection source;
    Intersection target;
  };
  for (const auto& [a, b] : pairs) {
    m(a);
    m(b);
  }
  std::vector<Outcome> outcomes(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    outcomes[k].source = global_intersection(m.source(), a, b);
    outcomes[k].target = global_intersection(m.target(), m(a), m(b));
  });

  SuperinjectivityReport report;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [src, tgt] = outcomes[k];
    if (!src || !tgt) {
      report.skipped.push_back(pairs[k]);
      continue;
    }
    ++report.checked;
    if (*src != *tgt) ++report.changed;
    if ((*src != 0) != (*tgt != 0)) {
      report.violations.push_back({pairs[k].first, pairs[k].second, *src, *tgt});
    }
  }
  return report;
}

std::vector<RefPair> sample_defined_pairs(const VertexMap& m, int count, std::uint64_t seed) {
  const auto entries = m.entries();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) candidates.emplace_back(i, j);
  }
  std::vector<char> defined(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t k) {
    const auto [i, j] = candidates[k];
    defined[k] = global_intersection(m.source(), entries[i].first, entries[j].first).has_value();
  });

  std::vector<RefPair> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (defined[k]) out.emplace_back(entries[candidates[k].first].first, entries[candidates[k].second].first);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = out.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(out[i - 1], out[pick(rng)]);
  }
  if (count >= 0 && out.size() > static_cast<std::size_t>(count)) {
    out.erase(out.begin() + count, out.end());
  }
  return out;
}

std::string_view to_string(Gadget gadget) {
  switch (gadget) {
    case Gadget::S12: return "s12";
    case Gadget::LadderArm: return "ladder";
    case Gadget::CantorStub: return "cantor";
  }
  return "?";
}

Gadget parse_gadget(std::string_view text) {
  if (text == "s12") return Gadget::S12;
  if (text == "ladder") return Gadget::LadderArm;
  if (text == "cantor") return Gadget::CantorStub;
  throw Error("UnknownGadget", std::string(text));
}

CutGlueResult cut_and_glue(const GluingGraph& g, std::string_view alpha, Gadget gadget,
                           std::int64_t slope_bound, int arm_depth) {
  require_valid(g);
  if (classify_curve(g, alpha) == CurveClass::Nonseparating) {
    throw Error("NotSeparating", std::string(alpha) + " is nonseparating");
  }
  if (arm_depth <= 0) arm_depth = static_cast<int>(g.pants.size());
  const std::string prefix = std::string(alpha) + ".";
  const std::string sx = prefix + "sx";
  const std::string sy = prefix + "sy";

  auto target = std::make_shared<GluingGraph>(g);
  auto it = std::find_if(target->curves.begin(), target->curves.end(),
                         [&](const Curve& c) { return c.id == alpha; });
  const PantsSlot side_x = it->ends[0];
  const PantsSlot side_y = it->ends[1];
  it = target->curves.erase(it);
  it = target->curves.insert(it, Curve{sx, {side_x}});
  target->curves.insert(it + 1, Curve{sy, {side_y}});

  Splicer splicer(*target);
  std::string first_handle;
  std::string third;
  switch (gadget) {
    case Gadget::S12:
      third = prefix + "gc";
      first_handle = prefix + "gh";
      splicer.add_pants(prefix + "G1", {first_handle, first_handle, third});
      break;
    case Gadget::LadderArm:
      third = prefix + "arm";
      break;
    case Gadget::CantorStub:
      third = prefix + "o";
      break;
  }
  const std::string splice = prefix + "G2";
  splicer.add_pants(splice, {third, sx, sy});
  if (gadget == Gadget::LadderArm) {
    first_handle = splicer.arm(prefix + "r", third, arm_depth);
  } else if (gadget == Gadget::CantorStub) {
    splicer.add_pants(prefix + "B", {third, prefix + "x0", prefix + "x1"});
    first_handle = splicer.arm(prefix + "b0", prefix + "x0", arm_depth);
    splicer.arm(prefix + "b1", prefix + "x1", arm_depth);
  }
  require_valid(*target);

  // A chain entering alpha from side x leaves through side y.
  SurfaceIndex source_index(g);
  const int x_pants = *source_index.pants_index(side_x.pants);
  auto from_side_x = [&](const std::string& previous) {
    const auto [a, b] = source_index.curve_pants(source_index.require_curve(previous));
    return a == x_pants || b == x_pants;
  };
  auto image_of = [&](const CurveRef& ref) {
    if (const auto* p = ref.as_pants()) return p->id == alpha ? CurveRef::pants(sx) : ref;
    if (ref.as_window()) return ref;
    const auto& c = *ref.as_chain();
    std::vector<std::string> path;
    for (std::size_t i = 0; i < c.path.size(); ++i) {
      if (c.path[i] != alpha) {
        path.push_back(c.path[i]);
        continue;
      }
      const bool forward = from_side_x(i == 0 ? c.from : c.path[i - 1]);
      path.push_back(forward ? sx : sy);
      path.push_back(forward ? sy : sx);
    }
    return CurveRef::chain(c.from, c.to, std::move(path));
  };

  std::vector<VertexMap::Entry> entries;
  for (const CurveRef& ref : standard_inventory(g, slope_bound, alpha)) {
    entries.emplace_back(ref, image_of(ref));
  }
  auto source = std::make_shared<const GluingGraph>(g);
  VertexMap map(source, target, std::move(entries),
                "cut along " + std::string(alpha) + ", spliced " + std::string(to_string(gadget)) +
                    " gadget");

  std::vector<CurveRef> witnesses;
  SurfaceIndex target_index(*target);
  for (int c = 0; c < target_index.curve_count(); ++c) {
    const std::string& id = target_index.curve_id(c);
    if (target_index.is_frontier(c) || id == sx || id == sy || !id.starts_with(prefix)) continue;
    witnesses.push_back(CurveRef::pants(id));
  }
  for (const auto& [p, q] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{-1, 1}}) {
    witnesses.push_back(CurveRef::window(first_handle, make_slope(p, q)));
  }

  std::set<std::string> image_ids;
  for (const auto& [_, to] : map.entries()) image_ids.merge(identifiers(to));
  for (const CurveRef& w : witnesses) {
    validate_ref(*target, w);
    for (const auto& id : identifiers(w)) {
      if (image_ids.contains(id) || map.in_image(w)) {
        throw Error("WitnessInImage", w.to_string());
      }
    }
  }
  return CutGlueResult{*target, std::move(map), std::move(witnesses)};
}

bool surfaces_homeomorphic(const GluingGraph& g1, const GluingGraph& g2, int depth) {
  require_valid(g1);
  require_valid(g2);
  if (g1.boundary.size() != g2.boundary.size()) return false;
  const bool infinite1 = !g1.frontier.empty();
  const bool infinite2 = !g2.frontier.empty();
  if (infinite1 != infinite2) return false;
  if (!infinite1) return signature(g1).genus == signature(g2).genus;
  const EndTree t1 = surface_end_tree(g1, g1.pants.front(), depth);
  const EndTree t2 = surface_end_tree(g2, g2.pants.front(), depth);
  return end_trees_isomorphic(t1, t2);
}

int common_end_depth(const GluingGraph& g1, const GluingGraph& g2) {
  return std::min(max_end_depth(pants_framed_graph(g1), 0, kScaffoldStride),
                  max_end_depth(pants_framed_graph(g2), 0, kScaffoldStride));
}

Counterexample nonhomeomorphic_counterexample(Gadget gadget, int end_depth) {
  if (gadget == Gadget::S12) {
    throw Error("GadgetTooSmall", "an S_{1,2} splice does not change the end space");
  }
  if (end_depth < 1) throw Error("InvalidDepth", "end depth must be >= 1");
  const int depth = 2 * end_depth + 3;
  GluingGraph source = build_truncation(InfiniteModel::LochNess, depth);
  CutGlueResult result = cut_and_glue(source, "c1", gadget, 2, depth);
  return Counterexample{std::move(source), std::move(result), end_depth};
}

VertexMap twist_map(const GluingGraph& g, std::string_view center, Slope along, int power,
                    std::int64_t bound) {
  const Window w = make_window(g, center);
  std::vector<VertexMap::Entry> entries;
  for (const Slope& s : slopes_within(bound)) {
    Slope image = s;
    for (int k = 0; k < std::abs(power); ++k) image = twist(w, along, image, power > 0 ? 1 : -1);
    entries.emplace_back(CurveRef::window(std::string(center), s),
                         CurveRef::window(std::string(center), image));
  }
  auto shared = std::make_shared<const GluingGraph>(g);
  return VertexMap(shared, shared, std::move(entries),
                   "twist^" + std::to_string(power) + " along " + along.to_string() + " in " +
                       std::string(center));
}

}  // namespace curvelab
