#include <doctest.h>

#include "fixtures.hpp"
#include "flowcalc/livsic.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace flowcalc;

namespace {

EdgePotential planted(const DirectedGraph& g, const std::vector<Rational>& h) {
  EdgePotential f{g, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) f.weights.push_back(h[g.target(e)] - h[g.source(e)]);
  return f;
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> h;
  for (std::size_t i = 0; i < n; ++i) h.push_back(testing::random_rational(rng, 20, 16));
  return h;
}

void check_witness(const EdgePotential& f, const CycleWitness& w) {
  REQUIRE_FALSE(w.cycle.empty());
  CHECK(is_cycle(f.graph, w.cycle));
  CHECK(oracle::is_primitive(w.cycle));
  CHECK(oracle::least_rotation(w.cycle) == w.cycle);
  Rational sum = 0;
  for (EdgeId e : w.cycle) sum += f.weights[e];
  CHECK(sum == w.sum);
  CHECK(sum != 0);
}

LocalFunction edge_function(const EdgeShift& x, std::initializer_list<std::pair<const char*, long>> values) {
  LocalFunction f{0, {}};
  for (auto [label, v] : values) f.table[Word{x.symbol_id(label)}] = v;
  return f;
}

}  // namespace

TEST_CASE("zero on cycles") {
  EdgeShift loop = fixture::full_shift({"a"});
  CHECK(zero_on_cycles(EdgePotential{loop.graph(), {0}}).zero);
  CycleCheck one = zero_on_cycles(EdgePotential{loop.graph(), {1}});
  REQUIRE_FALSE(one.zero);
  CHECK(one.witness->cycle == Word{0});
  CHECK(one.witness->sum == 1);

  GraphBuilder b;
  b.vertex("u").vertex("v").edge("e", "u", "v").edge("f", "v", "u");
  DirectedGraph two = b.build();
  CHECK(zero_on_cycles(EdgePotential{two, {1, -1}}).zero);
  CycleCheck bad = zero_on_cycles(EdgePotential{two, {1, 1}});
  REQUIRE_FALSE(bad.zero);
  check_witness(EdgePotential{two, {1, 1}}, *bad.witness);
}

TEST_CASE("zero on cycles handles several components") {
  // Two loops in separate components; only the second is unbalanced.
  GraphBuilder b;
  b.vertex("u").vertex("v").edge("a", "u", "u").edge("c", "u", "v").edge("d", "v", "v");
  EdgePotential f{b.build(), {0, 5, Rational(1, 3)}};
  CycleCheck c = zero_on_cycles(f);
  REQUIRE_FALSE(c.zero);
  CHECK(c.witness->cycle == Word{2});
  CHECK(c.witness->sum == Rational(1, 3));
  CHECK_THROWS_AS(graph_potential(f), NotIrreducible);
}

TEST_CASE("graph potential examples") {
  EdgeShift x = fixture::golden_mean();
  VertexPotential zero = graph_potential(EdgePotential{x.graph(), {0, 0, 0}});
  CHECK(zero.values == std::vector<Rational>{0, 0});

  GraphBuilder b;
  b.vertex("u").vertex("v").edge("e", "u", "v").edge("f", "v", "u");
  VertexPotential h = graph_potential(EdgePotential{b.build(), {1, -1}});
  CHECK(h.base == 0);
  CHECK(h.values == std::vector<Rational>{0, 1});

  EdgePotential loop{fixture::full_shift().graph(), {1, 0}};
  try {
    graph_potential(loop);
    FAIL("expected CycleObstruction");
  } catch (const CycleObstruction& o) {
    CHECK(o.witness().cycle == Word{0});
    CHECK(o.witness().sum == 1);
  }
}

TEST_CASE("coboundary examples") {
  SUBCASE("zero function") {
    EdgeShift x = fixture::golden_mean();
    LocalFunction b = coboundary(x, edge_function(x, {{"a", 0}, {"a'", 0}, {"b", 0}}));
    for (const auto& [w, v] : b.table) CHECK(v == 0);
  }
  SUBCASE("golden mean") {
    EdgeShift x = fixture::golden_mean();
    LocalFunction b = coboundary(x, edge_function(x, {{"a", 1}, {"a'", -1}, {"b", 0}}));
    CHECK(b.radius == 0);
    CHECK(b(fixture::word(x, "a'")) == 1);
    CHECK(b(fixture::word(x, "a")) == 0);
    CHECK(b(fixture::word(x, "b")) == 0);
  }
  SUBCASE("full 2-shift has an obstruction at the fixed point a") {
    EdgeShift x = fixture::full_shift();
    try {
      coboundary(x, edge_function(x, {{"a", 1}, {"b", -1}}));
      FAIL("expected CycleObstruction");
    } catch (const CycleObstruction& o) {
      CHECK(o.witness().cycle == fixture::word(x, "a"));
      CHECK(o.witness().sum == 1);
    }
  }
  SUBCASE("refusals") {
    EdgeShift r(DirectedGraph::from_matrix(IntMatrix{{1, 2}, {0, 1}}));
    LocalFunction f{0, {}};
    for (EdgeId e = 0; e < r.alphabet_size(); ++e) f.table[Word{e}] = 0;
    CHECK_THROWS_AS(coboundary(r, f), NotIrreducible);
    EdgeShift x = fixture::full_shift();
    CHECK_THROWS_AS(coboundary(x, edge_function(x, {{"a", 0}})), PartialCode);
  }
}

TEST_CASE("planted potentials are recovered exactly") {
  auto rng = testing::make_rng(30);
  for (int trial = 0; trial < 300; ++trial) {
    DirectedGraph g = testing::random_irreducible_graph(rng, 6, 2);
    std::vector<Rational> hp = random_values(rng, g.vertex_count());
    EdgePotential f = planted(g, hp);
    CHECK(zero_on_cycles(f).zero);
    VertexPotential h = graph_potential(f);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(h.values[v] == hp[v] - hp[0]);
    CHECK(graph_potential(f) == h);

    EdgeShift x(g);
    LocalFunction lf{0, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) lf.table[Word{e}] = f.weights[e];
    LocalFunction b = coboundary(x, lf);
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(b(Word{e}) == hp[g.source(e)] - hp[0]);
  }
}

TEST_CASE("coboundary of a radius-1 transfer function") {
  auto rng = testing::make_rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    EdgeShift x(testing::random_irreducible_graph(rng, 3, 2));
    // B reads x[-1, 1]; f = B o sigma - B reads x[-1, 2], so radius 2.
    std::map<Word, Rational> big_b;
    for (const Word& w : words_of_length(x, 3)) big_b[w] = testing::random_rational(rng, 9, 8);
    LocalFunction f{2, {}};
    for (const Word& w : words_of_length(x, 5))
      f.table[w] = big_b.at(Word(w.begin() + 2, w.end())) - big_b.at(Word(w.begin() + 1, w.end() - 1));
    LocalFunction b = coboundary(x, f);
    CHECK(b.radius == 2);
    CHECK(b.table.size() == f.table.size());
    std::optional<Rational> offset;
    for (const auto& [w, v] : b.table) {
      Rational d = v - big_b.at(Word(w.begin() + 1, w.end() - 1));
      if (!offset) offset = d;
      CHECK(d == *offset);
    }
  }
}

TEST_CASE("single-edge perturbations are rejected with a true witness") {
  auto rng = testing::make_rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    DirectedGraph g = testing::random_irreducible_graph(rng, 6, 2);
    EdgePotential f = planted(g, random_values(rng, g.vertex_count()));
    auto e = static_cast<EdgeId>(testing::uniform(rng, 0, static_cast<long>(g.edge_count()) - 1));
    Rational delta = 0;
    while (delta == 0) delta = testing::random_rational(rng, 5, 7);
    f.weights[e] += delta;

    CycleCheck c = zero_on_cycles(f);
    REQUIRE_FALSE(c.zero);
    check_witness(f, *c.witness);
    try {
      graph_potential(f);
      FAIL("expected CycleObstruction");
    } catch (const CycleObstruction& o) {
      check_witness(f, o.witness());
    }

    EdgeShift x(g);
    LocalFunction lf{0, {}};
    for (EdgeId k = 0; k < g.edge_count(); ++k) lf.table[Word{k}] = f.weights[k];
    try {
      coboundary(x, lf);
      FAIL("expected CycleObstruction");
    } catch (const CycleObstruction& o) {
      CHECK(is_cycle(g, o.witness().cycle));
      CHECK(orbit_sum(lf, o.witness().cycle) == o.witness().sum);
      CHECK(o.witness().sum != 0);
    }
  }
}
