#include <gtest/gtest.h>

#include <random>
#include <set>

#include "curvelab/complexes.hpp"
#include "curvelab/error.hpp"

using namespace curvelab;

namespace {

std::string error_code(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<CurveRef> pants_curves(const GluingGraph& g) {
  std::vector<CurveRef> out;
  for (const auto& c : g.curves) {
    if (std::find(g.frontier.begin(), g.frontier.end(), c.id) == g.frontier.end()) {
      out.push_back(CurveRef::pants(c.id));
    }
  }
  return out;
}

std::set<std::pair<std::string, std::string>> edge_set(const LocalCurveGraph& lg) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [i, j] : lg.edges) {
    out.insert(std::minmax(lg.vertices[i].to_string(), lg.vertices[j].to_string()));
  }
  return out;
}

}  // namespace

TEST(LocalGraph, PantsCurvesFormAClique) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  const auto inventory = pants_curves(g);
  const LocalCurveGraph c = local_graph(g, inventory, ComplexKind::Curve);
  const std::size_t n = c.vertices.size();
  EXPECT_EQ(n, inventory.size());
  EXPECT_EQ(c.edges.size(), n * (n - 1) / 2);
  EXPECT_TRUE(c.undefined_pairs.empty());

  const LocalCurveGraph s = local_graph(g, inventory, ComplexKind::Schmutz);
  EXPECT_TRUE(s.edges.empty());
  // only the four handle curves are nonseparating
  EXPECT_EQ(s.vertices.size(), 4u);
}

TEST(LocalGraph, TorusWindowGivesFareyFragment) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 2);
  std::vector<CurveRef> inventory;
  const auto slopes = slopes_within(2);
  for (const Slope& s : slopes) inventory.push_back(CurveRef::window("a1", s));
  const LocalCurveGraph lg = local_graph(g, inventory, ComplexKind::Schmutz);
  std::set<std::pair<std::string, std::string>> expected;
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      const std::int64_t det = a.p() * b.q() - a.q() * b.p();
      if (det == 1 || det == -1) {
        expected.insert(std::minmax(CurveRef::window("a1", a).to_string(),
                                    CurveRef::window("a1", b).to_string()));
      }
    }
  }
  EXPECT_EQ(edge_set(lg), expected);
  EXPECT_FALSE(expected.empty());
}

TEST(LocalGraph, UndefinedPairsNeverEdges) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  const auto inventory = standard_inventory(g, 2);
  for (auto kind : {ComplexKind::Curve, ComplexKind::Nonseparating, ComplexKind::Schmutz}) {
    const LocalCurveGraph lg = local_graph(g, inventory, kind);
    EXPECT_FALSE(lg.undefined_pairs.empty());
    const std::set<std::pair<int, int>> edges(lg.edges.begin(), lg.edges.end());
    for (const auto& p : lg.undefined_pairs) EXPECT_FALSE(edges.contains(p));
    const std::int64_t want = kind == ComplexKind::Schmutz ? 1 : 0;
    for (auto [i, j] : lg.edges) {
      EXPECT_EQ(global_intersection(g, lg.vertices[i], lg.vertices[j]), want);
    }
    if (kind != ComplexKind::Curve) {
      for (const auto& v : lg.vertices) EXPECT_TRUE(is_nonseparating(g, v)) << v.to_string();
    }
  }
}

TEST(LocalGraph, MonotoneInInventory) {
  const GluingGraph g = build_truncation(InfiniteModel::Ladder, 3);
  const auto inventory = standard_inventory(g, 2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CurveRef> subset;
    for (const auto& r : inventory) {
      if (rng() % 2) subset.push_back(r);
    }
    for (auto kind : {ComplexKind::Curve, ComplexKind::Schmutz}) {
      const auto small = edge_set(local_graph(g, subset, kind));
      const auto big = edge_set(local_graph(g, inventory, kind));
      for (const auto& e : small) EXPECT_TRUE(big.contains(e));
    }
  }
}

TEST(LocalGraph, ModeNames) {
  EXPECT_EQ(parse_complex_kind("g"), ComplexKind::Schmutz);
  EXPECT_EQ(to_string(ComplexKind::Nonseparating), "n");
  EXPECT_EQ(error_code([] { parse_complex_kind("x"); }), "BadMode");
}

TEST(DisjointnessWitness, DistinctWindows) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 5);
  const CurveRef a = CurveRef::parse("win:a1:2/3");
  const CurveRef b = CurveRef::parse("win:c3:1/1");
  const CurveRef w = disjointness_witness(g, a, b);
  EXPECT_NE(w.as_pants(), nullptr);
  EXPECT_EQ(global_intersection(g, a, w), 0);
  EXPECT_EQ(global_intersection(g, w, b), 0);
  EXPECT_TRUE(is_nonseparating(g, w));
}

TEST(DisjointnessWitness, SameCurveAndNoRoom) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 3);
  const CurveRef a = CurveRef::pants("a2");
  const CurveRef w = disjointness_witness(g, a, a);
  EXPECT_NE(w, a);
  EXPECT_EQ(global_intersection(g, a, w), 0);

  const GluingGraph tiny = build_truncation(InfiniteModel::LochNess, 1);
  EXPECT_EQ(error_code([&] {
              disjointness_witness(tiny, CurveRef::parse("win:a1:1/0"), CurveRef::parse("win:a1:1/1"));
            }),
            "NoRoom");
}

TEST(DisjointnessWitness, RandomPairs) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 5);
  const auto inventory = standard_inventory(g, 2);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, inventory.size() - 1);
  for (int k = 0; k < 60; ++k) {
    const CurveRef& a = inventory[pick(rng)];
    const CurveRef& b = inventory[pick(rng)];
    const CurveRef w = disjointness_witness(g, a, b);
    EXPECT_EQ(global_intersection(g, a, w), 0) << a.to_string();
    EXPECT_EQ(global_intersection(g, w, b), 0) << b.to_string();
  }
}

TEST(SchmutzPath, LochNessHandles) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  const auto path = schmutz_path(g, CurveRef::pants("a1"), CurveRef::pants("a4"));
  ASSERT_EQ(path.size(), 5u);
  EXPECT_EQ(path.front(), CurveRef::pants("a1"));
  EXPECT_EQ(path.back(), CurveRef::pants("a4"));
  EXPECT_NE(path[1].as_chain(), nullptr);
  EXPECT_NE(path[3].as_chain(), nullptr);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EXPECT_EQ(global_intersection(g, path[i], path[i + 1]), 1);
  }
  EXPECT_EQ(schmutz_path(g, CurveRef::pants("a2"), CurveRef::pants("a2")).size(), 1u);
}

TEST(SchmutzPath, LadderOppositeArms) {
  const GluingGraph g = build_truncation(InfiniteModel::Ladder, 3);
  const auto handles = handle_curves(g);
  ASSERT_GE(handles.size(), 5u);
  const auto path = schmutz_path(g, CurveRef::pants("ar1"), CurveRef::pants("al1"));
  ASSERT_EQ(path.size(), 5u);
  EXPECT_EQ(path[2], CurveRef::pants("a0"));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EXPECT_EQ(global_intersection(g, path[i], path[i + 1]), 1);
  }
}

TEST(SchmutzPath, Errors) {
  const GluingGraph two = build_truncation(InfiniteModel::LochNess, 2);
  EXPECT_EQ(error_code([&] { schmutz_path(two, CurveRef::pants("a1"), CurveRef::pants("a2")); }),
            "NoRoom");
  EXPECT_EQ(error_code([&] { schmutz_path(two, CurveRef::pants("c1"), CurveRef::pants("a2")); }),
            "NotHandle");
}

TEST(Inventory, Contents) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  const auto inventory = standard_inventory(g, 2);
  const std::set<CurveRef> set(inventory.begin(), inventory.end());
  EXPECT_EQ(set.size(), inventory.size());
  EXPECT_TRUE(set.contains(CurveRef::pants("c2")));
  EXPECT_TRUE(set.contains(CurveRef::parse("win:a3:-2/1")));
  EXPECT_TRUE(set.contains(CurveRef::parse("win:c2:1/2")));
  EXPECT_FALSE(set.contains(CurveRef::parse("win:c3:1/2")));  // overlaps the c2 window
  EXPECT_TRUE(set.contains(CurveRef::parse("chain:a1:a4:c1,c2,c3,l4")));

  const auto skipped = standard_inventory(g, 2, "c2");
  const std::set<CurveRef> other(skipped.begin(), skipped.end());
  EXPECT_FALSE(other.contains(CurveRef::parse("win:c2:1/2")));
  EXPECT_TRUE(other.contains(CurveRef::parse("win:c3:1/2")));
}
