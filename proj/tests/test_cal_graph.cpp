#include <gtest/gtest.h>

#include <random>
#include <set>

#include "instances.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

GroupElement nf(const Garside& g, const char* w) { return g.normalize(AtomWord::parse(w)); }

bool has_edge(const std::vector<CalEdge>& edges, const CalVertex& to, EdgeKind kind) {
  for (const auto& e : edges)
    if (e.to == to && e.kind == kind) return true;
  return false;
}

}  // namespace

TEST(VertexOf, Examples) {
  Garside g(parse_system("A3"));
  EXPECT_EQ(vertex_of(g, g.identity()), base_vertex(g));
  EXPECT_EQ(vertex_of(g, g.delta_power(4)), base_vertex(g));
  const CalVertex v = vertex_of(g, g.multiply(g.delta_power(3), g.atom(1)));
  EXPECT_EQ(v.rep, g.atom(3));
  EXPECT_EQ(vertex_of(g, v.rep), v);
}

TEST(VertexOf, CosetInvariance) {
  std::mt19937_64 rng(41);
  for (const char* name : {"A3", "B3", "D4", "H3", "I2(7)"}) {
    Garside g(parse_system(name));
    for (int trial = 0; trial < 200; ++trial) {
      const GroupElement x = g.normalize(oracle::random_word(rng, g.system().rank(), 10));
      const CalVertex v = vertex_of(g, x);
      EXPECT_EQ(v.rep.inf, 0);
      EXPECT_EQ(v, vertex_of(g, g.multiply(x, g.delta_power(5))));
      EXPECT_EQ(v, vertex_of(g, g.multiply(x, g.delta_power(-3))));
      // x Delta^p = rep for p = -inf x.
      EXPECT_EQ(g.multiply(x, g.delta_power(-x.inf)), v.rep);
      const GroupElement y = g.normalize(oracle::random_word(rng, g.system().rank(), 4));
      const bool same_class = g.multiply(g.inverse(x), y).factors.empty();
      EXPECT_EQ(vertex_of(g, y) == v, same_class);
      EXPECT_TRUE(vertex_of(g, g.multiply(x, g.delta())) == v);
    }
  }
}

TEST(Neighbors, TrivialVertexOfA3) {
  Garside g(parse_system("A3"));
  const auto edges = neighbors(g, base_vertex(g), AbsorbablePool{});
  EXPECT_EQ(edges.size(), 22u);
  std::set<CalVertex> targets;
  for (const auto& e : edges) {
    EXPECT_EQ(e.kind, EdgeKind::simple);
    targets.insert(e.to);
  }
  EXPECT_EQ(targets.size(), 22u);
}

TEST(Neighbors, A2PoolInsideSimples) {
  Garside g(parse_system("A2"));
  const AbsorbablePool pool = make_pool(g, {g.atom(1), g.atom(2)});
  EXPECT_EQ(pool.elements.size(), 2u);
  const auto edges = neighbors(g, base_vertex(g), pool);
  for (const auto& e : edges)
    if (e.kind == EdgeKind::absorbable) {
      EXPECT_TRUE(has_edge(edges, e.to, EdgeKind::simple));
    }
}

TEST(Neighbors, PoolEdgesAreSymmetric) {
  std::mt19937_64 rng(42);
  Garside g(parse_system("A3"));
  const AbsorbablePool pool = make_pool(g, {g.atom(1), nf(g, "1 3"), nf(g, "1 2 3")});
  for (int trial = 0; trial < 40; ++trial) {
    const CalVertex u = vertex_of(g, g.normalize(oracle::random_word(rng, 3, 8)));
    for (const auto& e : neighbors(g, u, pool)) {
      if (e.kind != EdgeKind::absorbable) continue;
      ASSERT_TRUE(e.certificate.has_value());
      EXPECT_TRUE(verify_certificate(g, *e.certificate));
      EXPECT_EQ(e.certificate->absorbed, e.label);
      EXPECT_TRUE(has_edge(neighbors(g, e.to, pool), u, EdgeKind::absorbable));
    }
  }
}

TEST(Pool, RejectsUncertified) {
  Garside g(parse_system("A3"));
  EXPECT_THROW(make_pool(g, {g.delta()}), Error);
  Garside i5(parse_system("I2(5)"));
  EXPECT_THROW(make_pool(i5, {nf(i5, "1 2 1 2")}), Error);
  EXPECT_EQ(make_pool(i5, {nf(i5, "1 2 1")}).elements.size(), 2u);  // with its tau image
}

TEST(Ball, Examples) {
  Garside g(parse_system("A3"));
  const CalBall b0 = ball(g, base_vertex(g), 0, AbsorbablePool{});
  EXPECT_EQ(b0.vertices.size(), 1u);
  EXPECT_TRUE(b0.edges.empty());
  const CalBall b1 = ball(g, base_vertex(g), 1, AbsorbablePool{});
  EXPECT_EQ(b1.vertices.size(), 23u);
  EXPECT_TRUE(b1.complete);
  EXPECT_THROW(ball(g, base_vertex(g), -1, AbsorbablePool{}), Error);
  const CalBall cut = ball(g, base_vertex(g), 2, AbsorbablePool{}, 10);
  EXPECT_FALSE(cut.complete);
  EXPECT_LE(cut.vertices.size(), 10u);
}

// Radius r is contained in radius r+1; distances agree; simple edges match a
// brute-force adjacency test over all vertex pairs.
TEST(Ball, MonotoneAndEdgesMatchBruteForce) {
  Garside g(parse_system("A3"));
  const AbsorbablePool pool = make_pool(g, {g.atom(1), nf(g, "1 3")});
  const auto simples = g.proper_simples();
  CalBall prev = ball(g, base_vertex(g), 0, pool);
  for (int r = 1; r <= 2; ++r) {
    const CalBall b = ball(g, base_vertex(g), r, pool);
    std::map<CalVertex, int> dist;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) dist[b.vertices[i]] = b.distance[i];
    for (std::size_t i = 0; i < prev.vertices.size(); ++i) {
      ASSERT_TRUE(dist.count(prev.vertices[i]));
      EXPECT_EQ(dist[prev.vertices[i]], prev.distance[i]);
    }
    std::set<std::pair<int, int>> simple_edges;
    for (const auto& e : b.edges) {
      EXPECT_LT(e.from, e.to);
      if (e.kind == EdgeKind::simple) simple_edges.insert({e.from, e.to});
      if (e.kind == EdgeKind::absorbable) {
        EXPECT_EQ(vertex_of(g, g.multiply(b.vertices[e.from].rep, e.label)), b.vertices[e.to]);
        bool known = false;
        for (const auto& y : pool.elements) known = known || y == e.label || g.inverse(y) == e.label;
        EXPECT_TRUE(known);
      }
    }
    std::size_t expected = 0;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < b.vertices.size(); ++j) {
        bool adjacent = false;
        for (const auto& s : simples) {
          if (vertex_of(g, g.multiply(b.vertices[i].rep, g.from_simple(s))) == b.vertices[j]) adjacent = true;
          if (vertex_of(g, g.multiply(b.vertices[j].rep, g.from_simple(s))) == b.vertices[i]) adjacent = true;
        }
        if (adjacent) {
          ++expected;
          EXPECT_TRUE(simple_edges.count({static_cast<int>(i), static_cast<int>(j)}));
        }
      }
    EXPECT_EQ(simple_edges.size(), expected) << r;
    prev = b;
  }
}

TEST(Ball, A2EdgeKinds) {
  Garside g(parse_system("A2"));
  // Every nontrivial element the exact classifier accepts: the four atoms.
  const AbsorbablePool pool = make_pool(g, {g.atom(1), g.atom(2)});
  const CalBall b = ball(g, base_vertex(g), 2, pool);
  std::set<std::pair<int, int>> simple, absorbable;
  for (const auto& e : b.edges) (e.kind == EdgeKind::simple ? simple : absorbable).insert({e.from, e.to});
  EXPECT_FALSE(absorbable.empty());
  // Atoms and their inverses are simple up to Delta, so absorbable edges double simple ones.
  for (const auto& p : absorbable) EXPECT_TRUE(simple.count(p));
  EXPECT_EQ(simple.size() + absorbable.size(), b.edges.size());
  const std::string dot = ball_to_dot(g, b);
  EXPECT_NE(dot.find("kind=absorbable"), std::string::npos);
  EXPECT_NE(dot.find("kind=simple"), std::string::npos);
}

TEST(Export, JsonRoundTripAndDot) {
  Garside g(parse_system("A3"));
  const CalBall b = ball(g, vertex_of(g, g.atom(2)), 1, make_pool(g, {nf(g, "1 3")}));
  const Json j = ball_to_json(g, b);
  const CalBall back = ball_from_json(g, Json::parse(j.dump()));
  EXPECT_EQ(back.vertices.size(), b.vertices.size());
  EXPECT_EQ(back.edges.size(), b.edges.size());
  EXPECT_EQ(back.distance, b.distance);
  EXPECT_EQ(back.center, b.center);
  EXPECT_EQ(ball_to_json(g, back).dump(), j.dump());
  EXPECT_THROW(ball_from_json(Garside(parse_system("A4")), j), Error);

  const std::string dot = ball_to_dot(g, ball(g, base_vertex(g), 0, AbsorbablePool{}));
  EXPECT_EQ(dot.rfind("graph cal {", 0), 0u);
  EXPECT_NE(dot.find("n0 [label="), std::string::npos);
  EXPECT_EQ(dot.find("--"), std::string::npos);
}

TEST(DistanceBound, Examples) {
  Garside g(parse_system("A3"));
  const CalVertex o = base_vertex(g);
  EXPECT_EQ(distance_upper_bound(g, o, o, std::vector<Simple>{}), 0);
  const Simple s1 = g.atom_simple(1), s2 = g.atom_simple(2);
  EXPECT_EQ(distance_upper_bound(g, o, vertex_of(g, nf(g, "1 1 2")), std::vector<Simple>{s1, s1, s2}), 3);
  EXPECT_THROW(distance_upper_bound(g, o, vertex_of(g, g.atom(3)), std::vector<Simple>{s1}), Error);
  EXPECT_THROW(distance_upper_bound(g, o, o, std::vector<Simple>{g.delta_simple()}), Error);
  const auto d = decompose_delta_power(g, 2);
  EXPECT_EQ(distance_upper_bound(g, o, o, d), 3);
}

// Constructive diameter bounds: parabolic elements within 3 certified edges,
// normalizer elements within 9.
TEST(DistanceBound, ParabolicOrbitsAndNormalizers) {
  std::mt19937_64 rng(43);
  for (const char* name : {"A3", "A4", "B3"}) {
    Garside g(parse_system(name));
    const CalVertex o = base_vertex(g);
    for (std::uint32_t bits = 1; bits + 1 < (1u << g.system().rank()); ++bits) {
      const AtomSet x(bits);
      for (int trial = 0; trial < 50; ++trial) {
        const GroupElement h = instances::random_in_parabolic(rng, g, x, 12);
        EXPECT_LE(distance_upper_bound(g, o, vertex_of(g, h), decompose_parabolic(g, h, x)), 3) << name;
      }
    }
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = instances::random_normalizer(rng, g);
      EXPECT_LE(distance_upper_bound(g, o, vertex_of(g, n.alpha), decompose_normalizer(g, n.alpha, n.x)), 9) << name;
    }
  }
}

TEST(Action, LeftMultiplication) {
  std::mt19937_64 rng(44);
  Garside g(parse_system("B3"));
  for (int trial = 0; trial < 50; ++trial) {
    const GroupElement h = g.normalize(oracle::random_word(rng, 3, 6));
    const GroupElement k = g.normalize(oracle::random_word(rng, 3, 6));
    const CalVertex v = vertex_of(g, g.normalize(oracle::random_word(rng, 3, 6)));
    EXPECT_EQ(act(g, g.multiply(h, k), v), act(g, h, act(g, k, v)));
    EXPECT_EQ(act(g, g.delta(), v), vertex_of(g, g.tau(v.rep, -1)));
  }
}
