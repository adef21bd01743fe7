#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace garside;

namespace {

GroupElement nf(const Garside& g, const char* w) { return g.normalize(AtomWord::parse(w)); }
AtomSet set_of(std::vector<int> v) { return AtomSet::of(v); }

const char* const kRibbonSystems[] = {"A3", "A4", "B3", "B4", "D4", "H3", "F4", "I2(3)",
                                      "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"};

std::vector<AtomSet> subsets(AtomSet all) {
  std::vector<AtomSet> out;
  for (std::uint32_t b = 0; b <= all.bits(); ++b)
    if (AtomSet(b).subset_of(all)) out.push_back(AtomSet(b));
  return out;
}

GroupElement random_positive(const Garside& g, std::mt19937_64& rng, AtomSet x, int max_len) {
  const auto atoms = x.atoms();
  std::uniform_int_distribution<int> len(1, max_len);
  AtomWord w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back(atoms[rng() % atoms.size()]);
  return g.normalize(w);
}

}  // namespace

TEST(Support, Examples) {
  Garside g(parse_system("A3"));
  EXPECT_TRUE(support(g, g.identity()).empty());
  EXPECT_EQ(support(g, nf(g, "1 3")), set_of({1, 3}));
  EXPECT_EQ(support(g, g.delta()), g.atoms());
  EXPECT_THROW(support(g, nf(g, "-1")), Error);
  Garside a4(parse_system("A4"));
  for (AtomSet x : subsets(a4.atoms())) EXPECT_EQ(support(a4, sub_delta(a4, x)), x);
}

TEST(SubDelta, Examples) {
  Garside g(parse_system("A3"));
  EXPECT_TRUE(sub_delta(g, AtomSet()).is_identity());
  EXPECT_EQ(sub_delta(g, set_of({1, 2})), nf(g, "1 2 1"));
  EXPECT_EQ(sub_delta(g, set_of({1, 3})), nf(g, "1 3"));
  EXPECT_EQ(sub_delta(g, g.atoms()), g.delta());
}

// Delta_X is the shortest common multiple of X, found by BFS over the
// weak order of the reflection-representation oracle.
TEST(SubDelta, IsLcmOracle) {
  for (const char* name : {"A3", "B3", "H3", "D4"}) {
    Garside g(parse_system(name));
    oracle::ReflectionGroup w(g.system().matrix());
    for (AtomSet x : subsets(g.atoms())) {
      const std::vector<int>* lcm = nullptr;
      for (const auto& word : w.words()) {
        bool all = true;
        for (int a : x.atoms()) all = all && w.prefix({a}, word);
        if (all) {
          lcm = &word;
          break;  // breadth-first order: the first hit is shortest
        }
      }
      ASSERT_NE(lcm, nullptr);
      AtomWord aw;
      aw.letters = *lcm;
      EXPECT_EQ(sub_delta(g, x), g.normalize(aw)) << name << " " << x.to_string();
    }
  }
}

TEST(Member, Examples) {
  Garside g(parse_system("A3"));
  EXPECT_TRUE(member(g, nf(g, "1 3"), set_of({1, 3})));
  EXPECT_FALSE(member(g, nf(g, "2"), set_of({1, 3})));
  EXPECT_FALSE(member(g, g.delta(), set_of({1, 2})));
  EXPECT_TRUE(member(g, nf(g, "-1 -2 1 1"), set_of({1, 2})));
  EXPECT_TRUE(member(g, g.identity(), AtomSet()));
  EXPECT_FALSE(member(g, nf(g, "2 -1 3 -2"), set_of({1, 3})));
}

// Words over X^{+-1} always land in A_X; adding one letter outside X, with
// the word then normalized, never does (the support of an element is an
// invariant of the abelianization restricted to free letters).
TEST(Member, RandomWords) {
  std::mt19937_64 rng(21);
  for (const char* name : {"A4", "B4", "D4", "H3"}) {
    Garside g(parse_system(name));
    const int r = g.system().rank();
    for (int trial = 0; trial < 200; ++trial) {
      AtomSet x(static_cast<std::uint32_t>(rng() % ((1u << r) - 1)));
      if (x.empty()) continue;
      const auto atoms = x.atoms();
      AtomWord w;
      const int n = static_cast<int>(rng() % 9);
      for (int i = 0; i < n; ++i) w.letters.push_back(atoms[rng() % atoms.size()] * (rng() % 2 ? 1 : -1));
      const GroupElement h = g.normalize(w);
      EXPECT_TRUE(member(g, h, x)) << name;
      const int out = (g.atoms() - x).lowest();
      w.letters.insert(w.letters.begin() + (w.letters.empty() ? 0 : rng() % w.letters.size()), out);
      EXPECT_FALSE(member(g, g.normalize(w), x)) << name;
    }
  }
}

TEST(SubStructure, RoundTrip) {
  std::mt19937_64 rng(22);
  auto sys = parse_system("B4");
  Garside g(sys);
  const AtomSet x = set_of({2, 3, 4});
  Garside sub(sys, x);
  EXPECT_EQ(from_sub(g, sub, sub.delta()), sub_delta(g, x));
  for (int trial = 0; trial < 100; ++trial) {
    AtomWord w;
    for (int i = 0; i < 8; ++i) w.letters.push_back((2 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
    const GroupElement in_sub = sub.normalize(w);
    EXPECT_EQ(to_sub(g, sub, from_sub(g, sub, in_sub)), in_sub);
  }
  EXPECT_THROW(to_sub(g, sub, g.atom(1)), Error);
}

TEST(Tau, SubExamples) {
  Garside g(parse_system("A3"));
  EXPECT_EQ(tau_sub(g, g.atom(1), set_of({1, 2})), g.atom(2));
  EXPECT_EQ(tau_atom(g.system(), set_of({1, 2}), 1), 2);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const GroupElement h = g.normalize(oracle::random_word(rng, 3, 10));
    EXPECT_EQ(tau_sub(g, h, g.atoms()), g.tau(h));
    AtomWord w;
    for (int i = 0; i < 6; ++i) w.letters.push_back((1 + static_cast<int>(rng() % 2)) * (rng() % 2 ? 1 : -1));
    const GroupElement in_x = g.normalize(w);
    EXPECT_EQ(tau_sub(g, in_x, set_of({1, 2}), 2), in_x);
  }
}

TEST(Ribbon, Examples) {
  Garside g(parse_system("A3"));
  const RibbonFactor empty = ribbon(g, AtomSet(), 2, Side::right);
  EXPECT_EQ(empty.value, g.atom(2));
  EXPECT_TRUE(empty.target.empty());  // conjugation carries the empty set to itself
  const RibbonFactor r = ribbon(g, set_of({1}), 2, Side::right);
  EXPECT_EQ(r.value, nf(g, "1 2"));
  EXPECT_EQ(r.target, set_of({2}));
  EXPECT_EQ(ribbon(g, set_of({1}), 2, Side::left).value, nf(g, "2 1"));
  EXPECT_EQ(ribbon(g, set_of({1, 3}), 2, Side::right).target, set_of({1, 3}));
  EXPECT_THROW(ribbon(g, set_of({1, 2}), 2, Side::right), Error);
}

// Every (X, t) with t outside X in every small system.
TEST(Ribbon, StructuralProperties) {
  for (const char* name : kRibbonSystems) {
    Garside g(parse_system(name));
    const auto& sys = g.system();
    for (AtomSet x : subsets(g.atoms()))
      for (int t : (g.atoms() - x).atoms()) {
        const RibbonFactor right = ribbon(g, x, t, Side::right);
        const RibbonFactor left = ribbon(g, x, t, Side::left);
        const std::string where = std::string(name) + " X=" + x.to_string() + " t=" + std::to_string(t);
        EXPECT_EQ(g.reverse(right.value), left.value) << where;
        const GroupElement big = sub_delta(g, x | AtomSet::single(t)), small = sub_delta(g, x);
        EXPECT_EQ(g.multiply(right.value, small), big) << where;
        EXPECT_EQ(g.multiply(small, left.value), big) << where;

        ASSERT_EQ(right.value.inf, 0) << where;
        ASSERT_EQ(right.value.canonical_length(), 1) << where;
        const Simple rs = right.value.factors[0], ls = left.value.factors[0];
        EXPECT_TRUE(g.is_left_weighted(rs, ls)) << where;
        EXPECT_TRUE(g.is_right_weighted(rs, ls)) << where;
        EXPECT_TRUE(g.is_left_weighted(ls, rs)) << where;
        EXPECT_TRUE(g.is_right_weighted(ls, rs)) << where;
        EXPECT_EQ(rs.right_descents(), AtomSet::single(t)) << where;
        EXPECT_EQ(ls.left_descents(), AtomSet::single(t)) << where;

        // r a r^{-1} is an atom of Y for each a in X, found by trying all atoms.
        AtomSet image;
        for (int a : x.atoms()) {
          const GroupElement c = g.multiply({right.value, g.atom(a), g.inverse(right.value)});
          int hit = 0;
          for (int b = 1; b <= sys.rank(); ++b)
            if (c == g.atom(b)) hit = b;
          EXPECT_NE(hit, 0) << where;
          if (hit) image = image | AtomSet::single(hit);
          EXPECT_EQ(hit, tau_atom(sys, x | AtomSet::single(t), tau_atom(sys, x, a))) << where;
        }
        EXPECT_EQ(image, right.target) << where;
        EXPECT_EQ(left.target, right.target) << where;
      }
  }
}

TEST(MinimalConjugator, Examples) {
  Garside g(parse_system("A3"));
  const MinimalConjugator a = minimal_conjugator(g, g.atom(1), g.atom(1));
  EXPECT_EQ(a.c, g.atom(1));
  EXPECT_EQ(a.kind, ConjugatorKind::in_parabolic);
  const MinimalConjugator b = minimal_conjugator(g, g.atom(1), nf(g, "2 1"));
  EXPECT_EQ(b.c, nf(g, "2 1"));
  EXPECT_EQ(b.kind, ConjugatorKind::ribbon);
  EXPECT_EQ(b.ribbon_atom, 2);
  const MinimalConjugator c = minimal_conjugator(g, g.atom(1), nf(g, "1 2 1"));
  EXPECT_EQ(c.c, g.atom(1));
  EXPECT_EQ(c.kind, ConjugatorKind::in_parabolic);
  EXPECT_THROW(minimal_conjugator(g, g.atom(1), g.atom(2)), Error);
  EXPECT_THROW(minimal_conjugator(g, g.atom(1), g.identity()), Error);
}

// No proper nontrivial simple prefix of c conjugates u to a positive element.
TEST(MinimalConjugator, Minimality) {
  std::mt19937_64 rng(24);
  for (const char* name : {"A3", "B3", "A4"}) {
    Garside g(parse_system(name));
    const auto simples = g.system().enumerate(g.atoms());
    for (int trial = 0; trial < 60; ++trial) {
      const GroupElement u = g.normalize(oracle::random_word(rng, g.system().rank(), 4, true));
      if (u.is_identity()) continue;
      const GroupElement x = g.from_simple(simples[rng() % simples.size()]);
      if (x.is_identity() || g.multiply({g.inverse(x), u, x}).inf < 0) continue;
      const MinimalConjugator mc = minimal_conjugator(g, u, x);
      EXPECT_TRUE(g.divides(mc.c, x, Order::prefix));
      EXPECT_GE(g.multiply({g.inverse(mc.c), u, mc.c}).inf, 0);
      for (const auto& s : simples) {
        const GroupElement p = g.from_simple(s);
        if (p.is_identity() || p == mc.c || !g.divides(p, mc.c, Order::prefix)) continue;
        EXPECT_LT(g.multiply({g.inverse(p), u, p}).inf, 0) << name;
      }
    }
  }
}

TEST(FactorConjugator, Examples) {
  Garside g(parse_system("A3"));
  const auto a = factor_conjugator(g, g.atom(1), nf(g, "1 1 1"));
  EXPECT_EQ(a.alpha, nf(g, "1 1 1"));
  EXPECT_TRUE(a.beta.factors.empty());
  const auto b = factor_conjugator(g, g.atom(1), nf(g, "2 1"));
  EXPECT_TRUE(b.alpha.is_identity());
  ASSERT_EQ(b.beta.factors.size(), 1u);
  EXPECT_EQ(b.beta.factors[0].atom, 2);
  EXPECT_EQ(b.beta.sets.back(), set_of({2}));
  const auto c = factor_conjugator(g, g.atom(1), nf(g, "1 2 1"));
  EXPECT_EQ(c.alpha, g.atom(1));
  ASSERT_EQ(c.beta.factors.size(), 1u);
  EXPECT_EQ(c.beta.factors[0].value, nf(g, "2 1"));
  EXPECT_THROW(factor_conjugator(g, g.atom(1), g.atom(2)), Error);
}

// Conjugators built as u^j Delta_X^e followed by a random chain of left
// ribbons; the factorization must recompose and respect the chain sets.
TEST(FactorConjugator, RandomRecomposition) {
  std::mt19937_64 rng(25);
  for (const char* name : {"A3", "A4", "B3", "D4", "H3"}) {
    Garside g(parse_system(name));
    const int r = g.system().rank();
    for (int trial = 0; trial < 1000; ++trial) {
      AtomSet x(1 + static_cast<std::uint32_t>(rng() % ((1u << r) - 2)));
      const GroupElement u = random_positive(g, rng, x, 5);
      const AtomSet xs = support(g, u);
      GroupElement conj = g.multiply(g.power(u, static_cast<int>(rng() % 3)),
                                     g.power(sub_delta(g, xs), static_cast<int>(rng() % 3)));
      GroupElement cur = g.multiply({g.inverse(conj), u, conj});
      const int chain = static_cast<int>(rng() % 4);
      for (int i = 0; i < chain; ++i) {
        const AtomSet s = support(g, cur);
        const auto outside = (g.atoms() - s).atoms();
        if (outside.empty()) break;
        const GroupElement rib = ribbon(g, s, outside[rng() % outside.size()], Side::left).value;
        conj = g.multiply(conj, rib);
        cur = g.multiply({g.inverse(rib), cur, rib});
      }
      ASSERT_GE(cur.inf, 0);
      const auto f = factor_conjugator(g, u, conj);
      EXPECT_EQ(g.multiply(f.alpha, f.beta.value), conj) << name;
      EXPECT_TRUE(member(g, f.alpha, xs)) << name;
      ASSERT_EQ(f.beta.sets.size(), f.beta.factors.size() + 1);
      GroupElement prod = g.identity();
      for (std::size_t i = 0; i < f.beta.factors.size(); ++i) {
        EXPECT_EQ(f.beta.factors[i].source, f.beta.sets[i]);
        EXPECT_EQ(f.beta.factors[i].target, f.beta.sets[i + 1]);
        EXPECT_EQ(f.beta.factors[i].side, Side::left);
        prod = g.multiply(prod, f.beta.factors[i].value);
      }
      EXPECT_EQ(prod, f.beta.value);
      EXPECT_EQ(f.beta.sets.back(), support(g, cur)) << name;
    }
  }
}

// The Garside generators of A_X embed isometrically: distances in the
// Cayley graph of A_X over S_X^{+-1} equal distances in A over S^{+-1}.
// Exhaustive by BFS up to radius 3 in A3.
TEST(Godelle, IsometryByBfs) {
  auto sys = parse_system("A3");
  Garside g(sys);
  auto ball = [&](const Garside& over, int radius) {
    std::vector<GroupElement> gens;
    for (const auto& s : sys->enumerate(over.atoms()))
      if (!s.is_identity()) {
        gens.push_back(g.from_simple(s));
        gens.push_back(g.inverse(g.from_simple(s)));
      }
    std::map<GroupElement, int> dist{{g.identity(), 0}};
    std::vector<GroupElement> frontier{g.identity()};
    for (int d = 1; d <= radius; ++d) {
      std::vector<GroupElement> next;
      for (const auto& f : frontier)
        for (const auto& s : gens) {
          GroupElement h = g.multiply(f, s);
          if (dist.emplace(h, d).second) next.push_back(std::move(h));
        }
      frontier = std::move(next);
    }
    return dist;
  };
  const auto full = ball(g, 3);
  for (AtomSet x : {set_of({1}), set_of({1, 2}), set_of({1, 3}), set_of({2, 3})}) {
    Garside sub(sys, x);
    const auto part = ball(sub, 3);
    for (const auto& [h, d] : part) {
      ASSERT_TRUE(full.count(h));
      EXPECT_EQ(full.at(h), d) << x.to_string();
    }
    for (const auto& [h, d] : full)
      if (member(g, h, x)) {
        EXPECT_TRUE(part.count(h)) << x.to_string();
      }
  }
}

// Same statement through the closed-form geodesic length, on A4 with every
// element of the radius-3 ball of each maximal parabolic.
TEST(Godelle, IsometryGeodesicLength) {
  auto sys = parse_system("A4");
  Garside g(sys);
  for (int drop = 1; drop <= 4; ++drop) {
    const AtomSet x = g.atoms() - AtomSet::single(drop);
    Garside sub(sys, x);
    std::vector<GroupElement> gens;
    for (const auto& s : sys->enumerate(x))
      if (!s.is_identity()) {
        gens.push_back(sub.from_simple(s));
        gens.push_back(sub.inverse(sub.from_simple(s)));
      }
    std::set<GroupElement> seen{sub.identity()};
    std::vector<GroupElement> frontier{sub.identity()};
    for (int d = 1; d <= 2; ++d) {
      std::vector<GroupElement> next;
      for (const auto& f : frontier)
        for (const auto& s : gens) {
          GroupElement h = sub.multiply(f, s);
          if (seen.insert(h).second) next.push_back(std::move(h));
        }
      frontier = std::move(next);
    }
    std::mt19937_64 rng(26 + drop);
    for (const auto& h : seen) {
      EXPECT_EQ(sub.lengths(h).geodesic, g.lengths(from_sub(g, sub, h)).geodesic);
      const GroupElement h3 = sub.multiply(h, gens[rng() % gens.size()]);
      EXPECT_EQ(sub.lengths(h3).geodesic, g.lengths(from_sub(g, sub, h3)).geodesic);
    }
  }
}
