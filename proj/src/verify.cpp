#include "curvelab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>

#include "curvelab/complexes.hpp"
#include "curvelab/curves.hpp"
#include "curvelab/ends.hpp"
#include "curvelab/error.hpp"
#include "curvelab/morphisms.hpp"
#include "curvelab/pants_graphs.hpp"
#include "curvelab/parallel.hpp"

namespace curvelab {

namespace {

constexpr std::size_t kMaxNotes = 10;

class Tally {
 public:
  explicit Tally(std::string suite) { result_.suite = std::move(suite); }

  void pass() { ++checked_; }
  void fail(const std::string& note) {
    ++checked_;
    std::lock_guard lock(mutex_);
    ++result_.failures;
    if (result_.notes.size() < kMaxNotes) result_.notes.push_back(note);
  }
  void check(bool ok, const std::string& note) { ok ? pass() : fail(note); }

  SuiteResult finish() {
    result_.checked = checked_;
    std::sort(result_.notes.begin(), result_.notes.end());
    return result_;
  }

 private:
  std::atomic<int> checked_{0};
  std::mutex mutex_;
  SuiteResult result_;
};

template <typename T>
T or_default(T value, T fallback) {
  return value > 0 ? value : fallback;
}

SuiteResult cutpoints(const SuiteOptions& o) {
  Tally tally("cutpoints");
  const int max_depth = or_default(o.depth, 5);
  const int graphs = or_default(o.samples, 200);
  const int max_pants = static_cast<int>(or_default<std::int64_t>(o.bound, 40));
  auto check = [&](const GluingGraph& g, const std::string& name) {
    std::set<std::string> expected;
    for (const auto& [id, cls] : classify_all(g)) {
      if (cls == CurveClass::NonOuterSeparating) expected.insert(id);
    }
    const auto cuts = cut_vertices(adjacency_graph(g));
    tally.check(std::set<std::string>(cuts.begin(), cuts.end()) == expected,
                name + ": cut vertices differ from non-outer separating curves");
  };
  for (auto model : {InfiniteModel::LochNess, InfiniteModel::Ladder, InfiniteModel::CantorTree}) {
    for (int d = 1; d <= max_depth; ++d) {
      check(build_truncation(model, d), std::string(to_string(model)) + "/" + std::to_string(d));
    }
  }
  parallel_for(graphs, [&](std::size_t k) {
    const std::uint64_t seed = o.seed + k;
    check(random_gluing_graph(seed, max_pants), "random seed " + std::to_string(seed));
  });
  return tally.finish();
}

SuiteResult ends(const SuiteOptions& o) {
  Tally tally("ends");
  const int max_depth = or_default(o.depth, 6);
  for (auto model : {InfiniteModel::LochNess, InfiniteModel::Ladder, InfiniteModel::CantorTree}) {
    for (int d = 1; d <= max_depth; ++d) {
      const std::string name = std::string(to_string(model)) + "/" + std::to_string(d);
      const int expected = model == InfiniteModel::LochNess ? 1
                           : model == InfiniteModel::Ladder ? 2
                                                            : 1 << d;
      try {
        const GluingGraph g = build_truncation(model, required_truncation_depth(model, d));
        const EndCorrespondence c = induced_end_correspondence(g, g.pants.front(), d);
        tally.check(end_trees_isomorphic(c.adjacency_tree, c.surface_tree) &&
                        c.surface_tree.leaf_count(d) == expected &&
                        c.adjacency_tree.leaf_count(d) == expected,
                    name + ": end trees differ or wrong leaf count");
      } catch (const Error& e) {
        tally.fail(name + ": " + e.what());
      }
    }
  }
  return tally.finish();
}

SuiteResult triples(const SuiteOptions& o) {
  Tally tally("triples");
  const Window w = torus_window();
  const Slope a{};
  for (const Slope& b : slopes_within(or_default<std::int64_t>(o.bound, 50))) {
    const std::int64_t i_ab = window_intersection(w, a, b);
    if (i_ab < 2) continue;
    const auto [g, g2] = triple_completion(w, a, b);
    const std::int64_t x = window_intersection(w, b, g);
    const std::int64_t y = window_intersection(w, b, g2);
    tally.check(is_triple(w, a, g, g2) && x + y == i_ab && x > 0 && y > 0 &&
                    g2 == twist(w, a, g, +1),
                "b = " + b.to_string());
  }
  return tally.finish();
}

SuiteResult sch04(const SuiteOptions& o) {
  Tally tally("sch04");
  const Window w = sphere_window();
  const auto slopes = slopes_within(or_default<std::int64_t>(o.bound, 20));
  const std::int64_t search = or_default<std::int64_t>(o.search, 100);
  parallel_for(slopes.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      const Slope a = slopes[i];
      const Slope b = slopes[j];
      if (window_intersection(w, a, b) != 2) continue;
      try {
        const auto found = sch04_common_neighbors(w, a, b, search);
        bool ok = found.size() == 2;
        for (const Slope& c : found) {
          ok = ok && window_intersection(w, a, c) == 2 && window_intersection(w, b, c) == 2;
        }
        tally.check(ok, a.to_string() + ", " + b.to_string());
      } catch (const Error& e) {
        tally.fail(a.to_string() + ", " + b.to_string() + ": " + e.what());
      }
    }
  });
  return tally.finish();
}

SuiteResult dtcoords(const SuiteOptions& o) {
  Tally tally("dtcoords");
  const auto slopes = slopes_within(or_default<std::int64_t>(o.bound, 10));
  const int max_power = or_default(o.depth, 5);
  for (const Window& w : {torus_window(), sphere_window()}) {
    for (const Slope along : {Slope{}, make_slope(1, 0), make_slope(1, 1)}) {
      parallel_for(slopes.size(), [&](std::size_t i) {
        for (std::size_t j = i + 1; j < slopes.size(); ++j) {
          const std::int64_t before = window_intersection(w, slopes[i], slopes[j]);
          Slope x = slopes[i];
          Slope y = slopes[j];
          Slope xi = slopes[i];
          Slope yi = slopes[j];
          bool ok = true;
          for (int k = 1; k <= max_power; ++k) {
            x = twist(w, along, x, +1);
            y = twist(w, along, y, +1);
            xi = twist(w, along, xi, -1);
            yi = twist(w, along, yi, -1);
            ok = ok && window_intersection(w, x, y) == before &&
                 window_intersection(w, xi, yi) == before;
          }
          tally.check(ok, std::string(to_string(w.kind)) + " along " + along.to_string() + ": " +
                              slopes[i].to_string() + ", " + slopes[j].to_string());
        }
      });
    }
    const auto collision = dt_uniqueness_check(w.kind, or_default<std::int64_t>(o.search, 20));
    tally.check(!collision, std::string(to_string(w.kind)) + " coordinate collision");
  }
  return tally.finish();
}

SuiteResult diameter(const SuiteOptions& o) {
  Tally tally("diameter");
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, or_default(o.depth, 5));
  const auto inventory = standard_inventory(g, or_default<std::int64_t>(o.bound, 2));
  const int samples = or_default(o.samples, 100);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, inventory.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int k = 0; k < samples; ++k) pairs.emplace_back(pick(rng), pick(rng));
  parallel_for(pairs.size(), [&](std::size_t k) {
    const CurveRef& a = inventory[pairs[k].first];
    const CurveRef& b = inventory[pairs[k].second];
    const std::string name = a.to_string() + " ~ " + b.to_string();
    try {
      const CurveRef w = disjointness_witness(g, a, b);
      tally.check(global_intersection(g, a, w) == 0 && global_intersection(g, w, b) == 0,
                  name + ": witness " + w.to_string() + " meets an endpoint");
    } catch (const Error& e) {
      tally.fail(name + ": " + e.what());
    }
  });

  const auto handles = handle_curves(g);
  std::uniform_int_distribution<std::size_t> pick_handle(0, handles.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> handle_pairs;
  while (static_cast<int>(handle_pairs.size()) < samples / 2) {
    const std::size_t i = pick_handle(rng);
    const std::size_t j = pick_handle(rng);
    if (i != j) handle_pairs.emplace_back(i, j);
  }
  parallel_for(handle_pairs.size(), [&](std::size_t k) {
    const CurveRef h1 = CurveRef::pants(handles[handle_pairs[k].first]);
    const CurveRef h2 = CurveRef::pants(handles[handle_pairs[k].second]);
    const std::string name = h1.to_string() + " ~ " + h2.to_string();
    try {
      const auto path = schmutz_path(g, h1, h2);
      bool ok = path.size() <= 5 && path.front() == h1 && path.back() == h2;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        ok = ok && global_intersection(g, path[i], path[i + 1]) == 1;
      }
      tally.check(ok, name + ": path not certified");
    } catch (const Error& e) {
      tally.fail(name + ": " + e.what());
    }
  });
  return tally.finish();
}

SuiteResult counterexample(const SuiteOptions& o) {
  Tally tally("counterexample");
  const int samples = or_default(o.samples, 500);
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, or_default(o.depth, 4));
  const CutGlueResult cut = cut_and_glue(g, "c2", Gadget::S12);
  const auto pairs = sample_defined_pairs(cut.map, samples, o.seed);
  const auto report = check_superinjective(cut.map, pairs);
  tally.check(static_cast<int>(pairs.size()) == samples, "too few defined pairs");
  tally.check(report.clean(), "s12 map violates superinjectivity");
  tally.check(cut.witnesses.size() >= 3, "fewer than 3 witnesses");
  for (const CurveRef& w : cut.witnesses) {
    tally.check(!cut.map.in_image(w), w.to_string() + " is in the image");
  }
  for (Gadget gadget : {Gadget::LadderArm, Gadget::CantorStub}) {
    const Counterexample ce = nonhomeomorphic_counterexample(gadget);
    const auto r = check_superinjective(
        ce.result.map, sample_defined_pairs(ce.result.map, samples, o.seed));
    tally.check(r.clean(), std::string(to_string(gadget)) + ": superinjectivity violated");
    tally.check(!surfaces_homeomorphic(ce.source, ce.result.target, ce.depth),
                std::string(to_string(gadget)) + ": surfaces reported homeomorphic");
  }
  return tally.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cutpoints", "ends",     "triples",       "sch04",
                                                 "dtcoords",  "diameter", "counterexample"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "cutpoints") return cutpoints(options);
  if (name == "ends") return ends(options);
  if (name == "triples") return triples(options);
  if (name == "sch04") return sch04(options);
  if (name == "dtcoords") return dtcoords(options);
  if (name == "diameter") return diameter(options);
  if (name == "counterexample") return counterexample(options);
  throw Error("UnknownSuite", std::string(name));
}

}  // namespace curvelab
