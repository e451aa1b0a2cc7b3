#include <gtest/gtest.h>

#include <set>

#include "curvelab/error.hpp"
#include "curvelab/pants_graphs.hpp"
#include "oracles.hpp"

using namespace curvelab;

namespace {

std::set<std::string> names(const AdjacencyGraph& a, const std::set<int>& idx) {
  std::set<std::string> out;
  for (int i : idx) out.insert(a.vertices[i]);
  return out;
}

std::set<std::pair<std::string, std::string>> edge_names(const AdjacencyGraph& a) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [i, j] : a.edges) out.insert(std::minmax(a.vertices[i], a.vertices[j]));
  return out;
}

GluingGraph ring_with_boundary() {
  // Two pants glued along alpha and beta, one boundary slot each.
  GluingGraph g;
  g.pants = {"P0", "P1"};
  g.curves = {{"alpha", {{"P0", 0}, {"P1", 0}}}, {"beta", {{"P0", 1}, {"P1", 1}}}};
  g.boundary = {{"P0", 2}, {"P1", 2}};
  return g;
}

}  // namespace

TEST(Adjacency, LochNessDepthTwoByHand) {
  // H1 = (a1, a1, c1), S2 = (c1, c2, l2), H2 = (a2, a2, l2); c2 is frontier.
  const AdjacencyGraph a = adjacency_graph(build_truncation(InfiniteModel::LochNess, 2));
  EXPECT_EQ(std::set<std::string>(a.vertices.begin(), a.vertices.end()),
            (std::set<std::string>{"a1", "c1", "l2", "a2"}));
  using E = std::pair<std::string, std::string>;
  EXPECT_EQ(edge_names(a), (std::set<E>{{"a1", "c1"}, {"c1", "l2"}, {"a2", "l2"}}));
  EXPECT_EQ(cut_vertices(a), (std::vector<std::string>{"c1", "l2"}));
}

TEST(Adjacency, FourHoledSphere) {
  const GluingGraph g = build_finite_surface(0, 4);
  const AdjacencyGraph a = adjacency_graph(g);
  ASSERT_EQ(a.vertices.size(), 1u);
  EXPECT_TRUE(a.edges.empty());
  EXPECT_TRUE(cut_vertices(a).empty());
  EXPECT_EQ(classify_curve(g, a.vertices[0]), CurveClass::OuterSeparating);
}

TEST(Adjacency, SimpleGraphWithoutLoops) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const AdjacencyGraph a = adjacency_graph(random_gluing_graph(seed, 30));
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : a.edges) {
      EXPECT_LT(i, j);
      EXPECT_TRUE(seen.insert({i, j}).second);
    }
    for (std::size_t v = 0; v < a.vertices.size(); ++v) {
      EXPECT_LE(a.degree(static_cast<int>(v)), 4);
    }
  }
}

TEST(Classify, LochNess) {
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 3);
  EXPECT_EQ(classify_curve(g, "a1"), CurveClass::Nonseparating);
  EXPECT_EQ(classify_curve(g, "c1"), CurveClass::NonOuterSeparating);
  EXPECT_EQ(classify_curve(g, "l3"), CurveClass::NonOuterSeparating);
  EXPECT_THROW(classify_curve(g, "c3"), Error);  // frontier
  EXPECT_THROW(classify_curve(g, "zz"), Error);
}

TEST(Classify, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const GluingGraph g = random_gluing_graph(seed, 25);
    const auto classes = classify_all(g);
    for (const auto& c : g.curves) {
      if (oracle::is_frontier(g, c.id)) continue;
      EXPECT_EQ(to_string(classes.at(c.id)), oracle::classify(g, c.id)) << seed << " " << c.id;
    }
  }
}

TEST(CutVertices, MatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const AdjacencyGraph a = adjacency_graph(random_gluing_graph(seed, 30));
    const auto cuts = cut_vertices(a);
    const auto expected = names(a, oracle::cut_vertices(static_cast<int>(a.vertices.size()), a.edges));
    EXPECT_EQ(std::set<std::string>(cuts.begin(), cuts.end()), expected) << seed;
  }
}

TEST(CutVertices, EqualNonOuterSeparating) {
  std::vector<GluingGraph> graphs;
  for (auto model : {InfiniteModel::LochNess, InfiniteModel::Ladder, InfiniteModel::CantorTree}) {
    for (int d = 1; d <= 5; ++d) graphs.push_back(build_truncation(model, d));
  }
  for (std::uint64_t seed = 500; seed < 600; ++seed) graphs.push_back(random_gluing_graph(seed, 40));
  for (const auto& g : graphs) {
    std::set<std::string> expected;
    for (const auto& [id, cls] : classify_all(g)) {
      if (cls == CurveClass::NonOuterSeparating) expected.insert(id);
    }
    const auto cuts = cut_vertices(adjacency_graph(g));
    EXPECT_EQ(std::set<std::string>(cuts.begin(), cuts.end()), expected);
  }
}

TEST(CutVertices, DisconnectedInputRejected) {
  AdjacencyGraph a;
  a.vertices = {"x", "y"};
  a.neighbors = {{}, {}};
  EXPECT_THROW(cut_vertices(a), Error);
}

TEST(Peripheral, RingDecomposition) {
  const GluingGraph g = ring_with_boundary();
  ASSERT_TRUE(validate(g).empty());
  const auto pairs = peripheral_pairs(g);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (std::pair<std::string, std::string>{"alpha", "beta"}));
  EXPECT_TRUE(peripheral_pairs(build_finite_surface(1, 2)).empty());
}

TEST(OuterDegree, HoldsAndDetectsForgery) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    EXPECT_TRUE(outer_degree_check(random_gluing_graph(seed, 30)).empty()) << seed;
  }
  // Pretend a degree-3 curve is outer.
  const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  const AdjacencyGraph a = adjacency_graph(g);
  auto classes = classify_all(g);
  classes["c2"] = CurveClass::OuterSeparating;
  const auto v = outer_degree_check(a, classes);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].curve, "c2");
  EXPECT_GT(v[0].degree, 2);
}
