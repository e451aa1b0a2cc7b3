#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/slope.hpp"
#include "oracles.hpp"

using namespace curvelab;

TEST(Slope, Normalizes) {
  EXPECT_EQ(make_slope(2, 4), make_slope(1, 2));
  EXPECT_EQ(make_slope(-1, -2), make_slope(1, 2));
  EXPECT_EQ(make_slope(3, -6), make_slope(-1, 2));
  EXPECT_EQ(make_slope(-5, 0), make_slope(1, 0));
  EXPECT_EQ(make_slope(0, -7), Slope{});
  EXPECT_EQ(make_slope(-4, 6).to_string(), "-2/3");
  EXPECT_THROW(make_slope(0, 0), Error);
}

TEST(Slope, Parses) {
  EXPECT_EQ(parse_slope("2/3"), make_slope(2, 3));
  EXPECT_EQ(parse_slope("-1/1"), make_slope(-1, 1));
  EXPECT_EQ(parse_slope("4/-2"), make_slope(-2, 1));
  for (const char* bad : {"", "1", "1/", "/2", "a/b", "1/2/3", "1.5/2"}) {
    try {
      parse_slope(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "BadSlope") << bad;
    }
  }
  try {
    parse_slope("0/0");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "ZeroSlope");
  }
}

TEST(Slope, PairingIsAntisymmetric) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Slope a = oracle::random_slope(rng, 30);
    const Slope b = oracle::random_slope(rng, 30);
    EXPECT_EQ(pairing(a, b), -pairing(b, a));
    EXPECT_EQ(pairing(a, a), 0);
  }
  EXPECT_EQ(pairing(Slope{}, make_slope(1, 0)), -1);
}

TEST(Slope, WithinBoundMatchesCoprimeCount) {
  for (std::int64_t bound = 1; bound <= 12; ++bound) {
    std::set<std::pair<std::int64_t, std::int64_t>> expected;
    for (std::int64_t p = -bound; p <= bound; ++p) {
      for (std::int64_t q = -bound; q <= bound; ++q) {
        if ((p != 0 || q != 0) && std::gcd(p, q) == 1) expected.insert(oracle::normalized(p, q));
      }
    }
    const auto slopes = slopes_within(bound);
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const Slope& s : slopes) got.insert({s.p(), s.q()});
    EXPECT_EQ(got.size(), slopes.size());
    EXPECT_EQ(got, expected) << bound;
    EXPECT_EQ(slopes.front(), make_slope(1, 0));
  }
}
