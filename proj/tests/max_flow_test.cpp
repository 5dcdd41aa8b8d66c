#include <gtest/gtest.h>

#include <random>

#include "kcausal/max_flow.hpp"

using namespace kcausal;

TEST(MaxFlow, ClassicNetwork) {
  // s=0, t=5; textbook instance with value 23.
  MaxFlow f(6);
  f.add_edge(0, 1, 16);
  f.add_edge(0, 2, 13);
  f.add_edge(1, 2, 10);
  f.add_edge(2, 1, 4);
  f.add_edge(1, 3, 12);
  f.add_edge(3, 2, 9);
  f.add_edge(2, 4, 14);
  f.add_edge(4, 3, 7);
  f.add_edge(3, 5, 20);
  f.add_edge(4, 5, 4);
  EXPECT_EQ(f.solve(0, 5), 23);
}

TEST(MaxFlow, RationalCapacitiesAndConservation) {
  MaxFlow f(4);
  const auto a = f.add_edge(0, 1, Rational(1, 3));
  const auto b = f.add_edge(0, 2, Rational(2, 7));
  const auto c = f.add_edge(1, 3, Rational(1, 5));
  const auto d = f.add_edge(2, 3, Rational(1));
  const auto e = f.add_edge(1, 2, Rational(1));
  EXPECT_EQ(f.solve(0, 3), Rational(1, 3) + Rational(2, 7));
  EXPECT_EQ(f.flow(a), f.flow(c) + f.flow(e));
  EXPECT_EQ(f.flow(b) + f.flow(e), f.flow(d));
  EXPECT_EQ(f.edge_from(e), 1u);
  EXPECT_EQ(f.edge_to(e), 2u);
  EXPECT_EQ(f.edge_count(), 5u);
}

TEST(MaxFlow, MinCutMatchesValue) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    MaxFlow f(n);
    struct E { std::size_t u, v; Rational c; };
    std::vector<E> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && rng() % 3 == 0) {
          edges.push_back({u, v, Rational(static_cast<long>(1 + rng() % 9), 1 + rng() % 5)});
          edges.back().c.canonicalize();
          f.add_edge(u, v, edges.back().c);
        }
    const Rational value = f.solve(0, n - 1);
    const auto side = f.source_side();
    ASSERT_TRUE(side[0]);
    ASSERT_FALSE(side[n - 1]);
    Rational cut = 0;
    for (const auto& e : edges)
      if (side[e.u] && !side[e.v]) cut += e.c;
    EXPECT_EQ(cut, value) << "trial " << trial;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      EXPECT_GE(f.flow(i), 0);
      EXPECT_LE(f.flow(i), edges[i].c);
    }
  }
}
