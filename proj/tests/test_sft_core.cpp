#include <doctest.h>

#include "fixtures.hpp"
#include "flowcalc/block_code.hpp"
#include "flowcalc/errors.hpp"
#include "flowcalc/shift.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace flowcalc;

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(DirectedGraph({"u", "u"}, {}), InvalidGraph);
  CHECK_THROWS_AS(DirectedGraph({"u"}, {Edge{"e", 0, 1, "a"}}), InvalidGraph);
  CHECK_THROWS_AS(DirectedGraph({"u"}, {Edge{"e", 0, 0, "a"}, Edge{"f", 0, 0, "a"}}), InvalidGraph);
  CHECK_THROWS_AS(DirectedGraph({"u"}, {Edge{"e", 0, 0, "a"}, Edge{"e", 0, 0, "b"}}), InvalidGraph);
}

TEST_CASE("from_matrix labels edges in row-major order") {
  DirectedGraph g = DirectedGraph::from_matrix(IntMatrix{{1, 2}, {0, 1}});
  REQUIRE(g.edge_count() == 4);
  CHECK(g.vertices() == std::vector<std::string>{"0", "1"});
  CHECK(g.label(0) == "a");
  CHECK(g.label(3) == "d");
  CHECK(g.source(1) == 0);
  CHECK(g.target(1) == 1);
  CHECK(g.adjacency() == IntMatrix{{1, 2}, {0, 1}});
  CHECK(alphabetic_label(25) == "z");
  CHECK(alphabetic_label(26) == "aa");
}

TEST_CASE("edge shifts must be essential and nonempty") {
  GraphBuilder b;
  b.vertex("u").vertex("v").edge("a", "u", "v");
  CHECK_THROWS_AS(EdgeShift(b.build()), NotEssential);
  CHECK_THROWS_AS(EdgeShift(DirectedGraph({"u"}, {})), EmptyShift);
}

TEST_CASE("trim_essential") {
  SUBCASE("already essential graphs are unchanged") {
    EdgeShift x = fixture::full_shift();
    CHECK(trim_essential(x.graph()) == x.graph());
    DirectedGraph r = DirectedGraph::from_matrix(IntMatrix{{1, 2}, {0, 1}});
    CHECK(trim_essential(r) == r);
  }
  SUBCASE("a path without cycles trims to nothing") {
    GraphBuilder b;
    b.vertex("u").vertex("v").edge("a", "u", "v");
    CHECK_THROWS_AS(trim_essential(b.build()), EmptyShift);
  }
  SUBCASE("dangling parts are removed, idempotently, keeping traces") {
    auto rng = testing::make_rng(1);
    for (int trial = 0; trial < 100; ++trial) {
      auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
      IntMatrix a = testing::random_matrix(rng, n, 0, 1);
      DirectedGraph g = DirectedGraph::from_matrix(a);
      DirectedGraph t;
      try {
        t = trim_essential(g);
      } catch (const EmptyShift&) {
        for (unsigned k = 1; k <= 5; ++k) CHECK(oracle::trace_power(a, k) == 0);
        continue;
      }
      CHECK(is_essential(t));
      CHECK(trim_essential(t) == t);
      for (unsigned k = 1; k <= 5; ++k) CHECK(oracle::trace_power(t.adjacency(), k) == oracle::trace_power(a, k));
    }
  }
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(fixture::full_shift()));
  CHECK(is_irreducible(fixture::golden_mean()));
  CHECK_FALSE(is_irreducible(DirectedGraph::from_matrix(IntMatrix{{1, 2}, {0, 1}})));
  auto rng = testing::make_rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    DirectedGraph g = testing::random_essential_graph(rng, 5, 2);
    CHECK(is_irreducible(g) == oracle::strongly_connected(g));
  }
}

TEST_CASE("periodic orbits") {
  SUBCASE("full 2-shift up to period 2") {
    EdgeShift x = fixture::full_shift();
    auto orbits = periodic_orbits(x, 2);
    std::set<PeriodicOrbit> expected{PeriodicOrbit::from_cyclic_word(fixture::word(x, "a")),
                                     PeriodicOrbit::from_cyclic_word(fixture::word(x, "b")),
                                     PeriodicOrbit::from_cyclic_word(fixture::word(x, "a b"))};
    CHECK(orbits == expected);
    CHECK(fixed_point_count(orbits, 2) == 4);
  }
  SUBCASE("golden mean has the single fixed point b") {
    EdgeShift x = fixture::golden_mean();
    auto orbits = periodic_orbits(x, 1);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits.begin()->word() == fixture::word(x, "b"));
  }
  SUBCASE("no short cycles gives no orbits") {
    GraphBuilder b;
    b.vertex("0").vertex("1").vertex("2").edge("a", "0", "1").edge("b", "1", "2").edge("c", "2", "0");
    EdgeShift x(b.build());
    CHECK(periodic_orbits(x, 2).empty());
    CHECK(periodic_orbits(x, 3).size() == 1);
  }
  SUBCASE("agrees with brute-force enumeration") {
    auto rng = testing::make_rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      EdgeShift x(testing::random_essential_graph(rng, 3, 2));
      auto orbits = periodic_orbits(x, 5);
      for (std::size_t n = 1; n <= 5; ++n) {
        std::set<Word> mine;
        for (const auto& o : orbits)
          if (o.period() == n) mine.insert(o.word());
        CHECK(mine == oracle::orbits_of_period(x.graph(), n));
      }
    }
  }
}

TEST_CASE("orbit canonical form") {
  EdgeShift x = fixture::full_shift();
  Word bab = fixture::word(x, "b a b a");
  PeriodicOrbit o = PeriodicOrbit::from_cycle(x.graph(), bab);
  CHECK(o.word() == fixture::word(x, "a b"));
  CHECK(o.period() == 2);
  EdgeShift g = fixture::golden_mean();
  CHECK_THROWS_AS(PeriodicOrbit::from_cycle(g.graph(), fixture::word(g, "a b")), InvalidWord);
  CHECK(least_period(fixture::word(x, "a b a b a b")) == 2);
  CHECK(least_rotation_index(fixture::word(x, "b b a b")) == 2);
}

TEST_CASE("words of length") {
  EdgeShift x = fixture::full_shift();
  CHECK(words_of_length(x, 0) == std::set<Word>{Word{}});
  CHECK(words_of_length(x, 2).size() == 4);
  EdgeShift g = fixture::golden_mean();
  std::set<Word> expected;
  for (const char* w : {"b b", "b a", "a a'", "a' b", "a' a"}) expected.insert(fixture::word(g, w));
  CHECK(words_of_length(g, 2) == expected);

  auto rng = testing::make_rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeShift y(testing::random_essential_graph(rng, 4, 2));
    for (unsigned n = 1; n <= 4; ++n) {
      auto words = words_of_length(y, n);
      CHECK(Integer(static_cast<unsigned long>(words.size())) == y.graph().adjacency().power(n).entry_sum());
      for (const Word& w : words) CHECK(is_composable(y.graph(), w));
    }
  }
}

TEST_CASE("higher block presentations") {
  SUBCASE("m = 1 is the identity") {
    EdgeShift x = fixture::golden_mean();
    HigherBlock hb = higher_block(x, 1);
    CHECK(hb.shift == x);
  }
  SUBCASE("full 2-shift, m = 2") {
    HigherBlock hb = higher_block(fixture::full_shift(), 2);
    CHECK(hb.shift.graph().vertex_count() == 2);
    CHECK(hb.shift.alphabet_size() == 4);
    CHECK(hb.shift.graph().adjacency() == IntMatrix{{1, 1}, {1, 1}});
    std::set<std::string> labels;
    for (const auto& e : hb.shift.graph().edges()) labels.insert(e.label);
    CHECK(labels == std::set<std::string>{"aa", "ab", "ba", "bb"});
  }
  SUBCASE("recoding is a period-preserving bijection on orbits") {
    auto rng = testing::make_rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      EdgeShift x(testing::random_essential_graph(rng, 3, 2));
      auto m = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
      HigherBlock hb = higher_block(x, m);
      for (unsigned n = 1; n <= 6; ++n)
        CHECK(oracle::trace_power(hb.shift.graph().adjacency(), n) == oracle::trace_power(x.graph().adjacency(), n));
      auto before = periodic_orbits(x, 5);
      auto after = periodic_orbits(hb.shift, 5);
      CHECK(before.size() == after.size());
      for (const auto& o : before) {
        PeriodicOrbit e = hb.encode(o);
        CHECK(e.period() == o.period());
        CHECK(after.contains(e));
        CHECK(hb.decode(e) == o);
      }
    }
  }
}

TEST_CASE("trace formula on random graphs") {
  auto rng = testing::make_rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeShift x(testing::random_essential_graph(rng, 4, 2));
    auto orbits = periodic_orbits(x, 6);
    for (unsigned n = 1; n <= 6; ++n) CHECK(fixed_point_count(orbits, n) == oracle::trace_power(x.graph().adjacency(), n));
  }
}

TEST_CASE("sliding block codes") {
  EdgeShift x = fixture::full_shift();
  HigherBlock hb = higher_block(x, 3);
  BlockCode enc = BlockCode::block_encoder(x, hb);
  BlockCode dec = BlockCode::block_decoder(x, hb);
  CHECK(enc.is_total());
  CHECK(dec.is_total());
  BlockCode round = enc.then(dec);
  for (const auto& o : periodic_orbits(x, 6)) {
    CHECK(enc.apply(o) == hb.encode(o));
    CHECK(round.apply(o) == o);
  }
  CHECK(round.memory() == 0);
  CHECK(round.anticipation() == 2);

  std::map<Word, EdgeId> partial{{fixture::word(x, "a"), 0}};
  BlockCode p(x, x, 0, 0, partial);
  CHECK_FALSE(p.is_total());
  CHECK(p.missing_window() == fixture::word(x, "b"));
  CHECK_THROWS_AS(p.apply_cyclic(fixture::word(x, "a b")), PartialCode);
}
