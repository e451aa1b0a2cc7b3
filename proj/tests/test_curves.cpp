#include <gtest/gtest.h>

#include <random>

#include "curvelab/curves.hpp"
#include "curvelab/error.hpp"
#include "oracles.hpp"

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

CurveRef ref(const char* text) { return CurveRef::parse(text); }

// Genus one with three boundary slots: a cycle of three pants.
GluingGraph three_ring() {
  GluingGraph g;
  g.pants = {"P0", "P1", "P2"};
  g.curves = {{"e0", {{"P0", 0}, {"P2", 1}}},
              {"e1", {{"P0", 1}, {"P1", 0}}},
              {"e2", {{"P1", 1}, {"P2", 0}}}};
  g.boundary = {{"P0", 2}, {"P1", 2}, {"P2", 2}};
  return g;
}

const GluingGraph& loch4() {
  static const GluingGraph g = build_truncation(InfiniteModel::LochNess, 4);
  return g;
}

}  // namespace

TEST(WindowArithmetic, TorusMatchesSquareTorusDrawing) {
  const auto slopes = slopes_within(4);
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      EXPECT_EQ(window_intersection(WindowKind::Torus, a, b),
                oracle::torus_line_crossings(a.p(), a.q(), b.p(), b.q()))
          << a.to_string() << " " << b.to_string();
    }
  }
}

TEST(WindowArithmetic, SphereDoublesTorus) {
  const auto slopes = slopes_within(6);
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      EXPECT_EQ(window_intersection(WindowKind::Sphere, a, b),
                2 * window_intersection(WindowKind::Torus, a, b));
    }
  }
  EXPECT_EQ(window_intersection(sphere_window(), Slope{}, make_slope(1, 0)), 2);
}

TEST(Triple, CompletionByHand) {
  const Window w = torus_window();
  // b = 2/3 in the frame of a = 0/1: neighbours 1/1 and 1/2 split i = 2.
  const auto [g, g2] = triple_completion(w, Slope{}, make_slope(2, 3));
  EXPECT_EQ(g, make_slope(1, 1));
  EXPECT_EQ(g2, make_slope(1, 2));
  EXPECT_TRUE(is_triple(w, Slope{}, g, g2));
  EXPECT_FALSE(is_triple(w, Slope{}, make_slope(1, 0), make_slope(1, 2)));
}

TEST(Triple, AdditivityAgainstBruteForce) {
  const Window w = torus_window();
  const auto candidates = slopes_within(30);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const Slope a = oracle::random_slope(rng, 6);
    const Slope b = oracle::random_slope(rng, 6);
    const std::int64_t i_ab = window_intersection(w, a, b);
    if (i_ab < 2) {
      EXPECT_EQ(error_code([&] { triple_completion(w, a, b); }), "IntersectionTooSmall");
      continue;
    }
    const auto [g, g2] = triple_completion(w, a, b);
    const std::int64_t x = window_intersection(w, b, g);
    const std::int64_t y = window_intersection(w, b, g2);
    EXPECT_TRUE(is_triple(w, a, g, g2));
    EXPECT_EQ(x + y, i_ab);
    EXPECT_GT(x, 0);
    EXPECT_GT(y, 0);
    EXPECT_EQ(g2, twist(w, a, g, +1));
    // Some neighbour pair of a splits i(a, b) by exhaustive search too.
    bool found = false;
    for (const Slope& c : candidates) {
      if (window_intersection(w, a, c) != 1) continue;
      const std::int64_t u = window_intersection(w, b, c);
      for (int sign : {1, -1}) {
        const Slope c2 = make_slope(c.p() + sign * a.p(), c.q() + sign * a.q());
        const std::int64_t v = window_intersection(w, b, c2);
        if (u > 0 && v > 0 && u + v == i_ab) found = true;
      }
    }
    EXPECT_TRUE(found) << a.to_string() << " " << b.to_string();
  }
  EXPECT_EQ(error_code([] { triple_completion(sphere_window(), Slope{}, make_slope(2, 1)); }),
            "NotTorusWindow");
}

TEST(Sch04, NeighboursAreSumAndDifference) {
  const Window w = sphere_window();
  const auto slopes = slopes_within(8);
  int pairs = 0;
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      if (!(a < b) || window_intersection(w, a, b) != 2) continue;
      ++pairs;
      const auto [sp, sq] = oracle::normalized(a.p() + b.p(), a.q() + b.q());
      const auto [dp, dq] = oracle::normalized(a.p() - b.p(), a.q() - b.q());
      std::vector<Slope> expected = {make_slope(sp, sq), make_slope(dp, dq)};
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(sch04_common_neighbors(w, a, b, 16), expected);
    }
  }
  EXPECT_GT(pairs, 50);
}

TEST(Sch04, Errors) {
  const Window w = sphere_window();
  EXPECT_EQ(error_code([&] { sch04_common_neighbors(torus_window(), Slope{}, make_slope(1, 0), 5); }),
            "NotSphereWindow");
  EXPECT_EQ(error_code([&] { sch04_common_neighbors(w, Slope{}, make_slope(2, 1), 5); }),
            "WrongIntersection");
  // a + b = 5/8 needs a bound of 8.
  EXPECT_EQ(error_code([&] { sch04_common_neighbors(w, make_slope(3, 5), make_slope(2, 3), 7); }),
            "SearchBoundTooSmall");
  EXPECT_EQ(sch04_common_neighbors(w, make_slope(3, 5), make_slope(2, 3), 8),
            (std::vector<Slope>{make_slope(1, 2), make_slope(5, 8)}));
}

TEST(Twist, InverseAndInvariance) {
  std::mt19937_64 rng(5);
  for (const Window& w : {torus_window(), sphere_window()}) {
    for (int k = 0; k < 100; ++k) {
      const Slope along = oracle::random_slope(rng, 5);
      const Slope x = oracle::random_slope(rng, 20);
      const Slope y = oracle::random_slope(rng, 20);
      EXPECT_EQ(twist(w, along, twist(w, along, x, +1), -1), x);
      EXPECT_EQ(window_intersection(w, twist(w, along, x, 1), twist(w, along, y, 1)),
                window_intersection(w, x, y));
      EXPECT_EQ(twist(w, along, along, 1), along);
    }
  }
  // Twisting the dual along the center adds one center.
  EXPECT_EQ(twist(torus_window(), Slope{}, make_slope(1, 0), 1), make_slope(1, 1));
}

TEST(DehnThurston, UniqueAtBoundTwenty) {
  EXPECT_FALSE(dt_uniqueness_check(WindowKind::Torus, 20).has_value());
  EXPECT_FALSE(dt_uniqueness_check(WindowKind::Sphere, 20).has_value());
}

TEST(DehnThurston, VectorOnSurface) {
  const std::vector<CurveRef> coords = {ref("pants:a1"), ref("win:a1:1/0"), ref("win:a1:1/1")};
  const DTVector v = dt_vector(loch4(), ref("win:a1:2/3"), coords);
  EXPECT_EQ(v.values(), (std::vector<std::int64_t>{2, 3, 1}));
  const std::vector<CurveRef> bad = {ref("chain:a2:a4:l2,c2,c3,l4")};
  EXPECT_EQ(error_code([&] { dt_vector(loch4(), ref("chain:a1:a3:c1,c2,l3"), bad); }),
            "UndefinedPair");
}

TEST(CurveRef, ParseAndPrint) {
  for (const char* text : {"pants:a3", "win:a3:2/3", "win:c2:-1/1", "chain:a1:a3:c1,c2,l3"}) {
    EXPECT_EQ(ref(text).to_string(), text);
  }
  EXPECT_EQ(ref("win:a1:0/1"), ref("pants:a1"));
  EXPECT_EQ(ref("win:a1:2/4").to_string(), "win:a1:1/2");
  for (const char* bad : {"", "a1", "pants:", "win:a1", "win:a1:x", "chain:a1", "chain:a1:a2:", "foo:a1"}) {
    EXPECT_EQ(error_code([&] { ref(bad); }), "BadRef") << bad;
  }
}

TEST(Windows, KindsAndHoles) {
  const Window torus = make_window(loch4(), "a2");
  EXPECT_EQ(torus.kind, WindowKind::Torus);
  EXPECT_EQ(torus.support, (std::vector<std::string>{"H2"}));
  EXPECT_EQ(torus.holes.size(), 1u);

  const Window sphere = make_window(loch4(), "c2");
  EXPECT_EQ(sphere.kind, WindowKind::Sphere);
  EXPECT_EQ(sphere.support.size(), 2u);
  EXPECT_EQ(sphere.holes.size(), 4u);

  EXPECT_EQ(error_code([] { make_window(loch4(), "c1"); }), "InvalidWindow");
  EXPECT_EQ(error_code([] { make_window(loch4(), "c4"); }), "UnknownCurve");
  EXPECT_EQ(error_code([] { make_window(loch4(), "zz"); }), "UnknownCurve");
}

TEST(Windows, AtlasRejectsOverlap) {
  WindowAtlas atlas(loch4());
  atlas.add("c2");
  atlas.add("c2");
  atlas.add("a1");
  EXPECT_EQ(atlas.windows().size(), 2u);
  EXPECT_EQ(error_code([&] { atlas.add("c3"); }), "OverlappingWindow");
  EXPECT_NE(atlas.find("a1"), nullptr);
  EXPECT_EQ(atlas.find("c3"), nullptr);
}

TEST(GlobalIntersection, Rules) {
  const GluingGraph& g = loch4();
  auto i = [&](const char* a, const char* b) { return global_intersection(g, ref(a), ref(b)); };
  EXPECT_EQ(i("pants:a3", "win:a3:2/3"), 2);
  EXPECT_EQ(i("pants:c2", "win:c2:1/1"), 2);
  EXPECT_EQ(i("pants:c2", "win:c2:3/1"), 6);
  EXPECT_EQ(i("pants:a1", "pants:c2"), 0);
  EXPECT_EQ(i("pants:a1", "win:a3:1/0"), 0);
  EXPECT_EQ(i("pants:c1", "win:c2:1/0"), 0);
  EXPECT_EQ(i("win:a1:1/0", "win:a1:1/1"), 1);
  EXPECT_EQ(i("win:a1:1/0", "win:a2:1/0"), 0);
  EXPECT_EQ(i("win:c2:1/0", "win:a2:1/1"), 0);
  EXPECT_EQ(i("win:c2:1/0", "win:c3:1/0"), std::nullopt);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "pants:a1"), 1);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "pants:a3"), 1);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "pants:c2"), 2);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "pants:a2"), 0);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "pants:l2"), 0);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "win:a2:1/0"), 0);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "win:a1:1/0"), std::nullopt);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "chain:a2:a4:l2,c2,c3,l4"), std::nullopt);
  EXPECT_EQ(i("chain:a1:a3:c1,c2,l3", "chain:a1:a3:c1,c2,l3"), 0);
}

TEST(GlobalIntersection, Symmetric) {
  const GluingGraph& g = loch4();
  std::vector<CurveRef> refs;
  for (const char* id : {"a1", "a2", "c1", "c2", "c3", "l2"}) refs.push_back(CurveRef::pants(id));
  for (const char* w : {"a1", "a3", "c2"}) {
    for (const Slope& s : slopes_within(2)) refs.push_back(CurveRef::window(w, s));
  }
  refs.push_back(shortest_dual_chain(g, "a1", "a4"));
  refs.push_back(shortest_dual_chain(g, "a2", "a3"));
  for (const auto& a : refs) {
    for (const auto& b : refs) EXPECT_EQ(global_intersection(g, a, b), global_intersection(g, b, a));
  }
}

TEST(Chains, ShortestAndValidation) {
  const GluingGraph& g = loch4();
  EXPECT_EQ(shortest_dual_chain(g, "a1", "a3"), ref("chain:a1:a3:c1,c2,l3"));
  EXPECT_EQ(handle_curves(g), (std::vector<std::string>{"a1", "a2", "a3", "a4"}));
  for (const char* bad : {"chain:a1:a3:c1,l3", "chain:a1:a3:c1,c2,c3,l3", "chain:c1:a3:c2,l3",
                          "chain:a1:a1:c1", "chain:a1:a3:c1,c1,c2,l3"}) {
    EXPECT_EQ(error_code([&] { validate_ref(g, ref(bad)); }), "InvalidChain") << bad;
  }
  EXPECT_EQ(error_code([&] { shortest_dual_chain(g, "a1", "c2"); }), "InvalidChain");
}

TEST(Nonseparating, PantsWindowsAndChains) {
  const GluingGraph& g = loch4();
  EXPECT_TRUE(is_nonseparating(g, ref("pants:a1")));
  EXPECT_FALSE(is_nonseparating(g, ref("pants:c1")));
  EXPECT_TRUE(is_nonseparating(g, ref("win:a1:3/2")));
  EXPECT_TRUE(is_nonseparating(g, ref("chain:a1:a3:c1,c2,l3")));
  // Every hole of the c2 window leads to its own piece of the surface.
  for (const Slope& s : slopes_within(3)) {
    EXPECT_FALSE(is_nonseparating(g, CurveRef::window("c2", s))) << s.to_string();
  }

  // In the ring the holes e0 and e2 meet outside the window at e1.
  const GluingGraph ring = three_ring();
  ASSERT_TRUE(validate(ring).empty());
  EXPECT_TRUE(is_nonseparating(ring, ref("pants:e1")));
  EXPECT_FALSE(is_nonseparating(ring, ref("win:e1:1/0")));
  EXPECT_TRUE(is_nonseparating(ring, ref("win:e1:1/1")));
  EXPECT_TRUE(is_nonseparating(ring, ref("win:e1:2/1")));
}
