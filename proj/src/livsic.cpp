#include "flowcalc/livsic.hpp"

#include <deque>
#include <stdexcept>

#include "flowcalc/block_code.hpp"

namespace flowcalc {

Rational EdgePotential::sum_over(const Word& path) const {
  Rational s = 0;
  for (EdgeId e : path) s += weights.at(e);
  return s;
}

namespace {

constexpr EdgeId no_edge = static_cast<EdgeId>(-1);

struct Arborescence {
  std::vector<Rational> values;
  std::vector<EdgeId> parent;  // tree edge into each reached vertex
  std::vector<bool> reached;
};

// Breadth-first spanning arborescence from root inside one component.
Arborescence grow(const EdgePotential& f, const std::vector<std::size_t>& component,
                  VertexId root) {
  const DirectedGraph& g = f.graph;
  Arborescence t{std::vector<Rational>(g.vertex_count()),
                 std::vector<EdgeId>(g.vertex_count(), no_edge),
                 std::vector<bool>(g.vertex_count(), false)};
  std::deque<VertexId> queue{root};
  t.reached[root] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(u)) {
      VertexId w = g.target(e);
      if (component[w] != component[root] || t.reached[w]) continue;
      t.reached[w] = true;
      t.parent[w] = e;
      t.values[w] = t.values[u] + f.weights[e];
      queue.push_back(w);
    }
  }
  return t;
}

Word tree_path(const DirectedGraph& g, const Arborescence& t, VertexId root, VertexId to) {
  Word path;
  while (to != root) {
    EdgeId e = t.parent[to];
    path.push_back(e);
    to = g.source(e);
  }
  return Word(path.rbegin(), path.rend());
}

Word shortest_path(const DirectedGraph& g, const std::vector<std::size_t>& component,
                   VertexId from, VertexId to) {
  std::vector<EdgeId> via(g.vertex_count(), no_edge);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(u)) {
      VertexId w = g.target(e);
      if (component[w] != component[from] || seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  Word path;
  for (VertexId v = to; v != from; v = g.source(via[v])) path.push_back(via[v]);
  return Word(path.rbegin(), path.rend());
}

CycleWitness primitive_witness(const EdgePotential& f, const Word& closed) {
  PeriodicOrbit orbit = PeriodicOrbit::from_cyclic_word(closed);
  return CycleWitness{orbit.word(), f.sum_over(orbit.word())};
}

// Checks one component; returns a witness for the first inconsistent non-tree edge.
std::optional<CycleWitness> check_component(const EdgePotential& f,
                                            const std::vector<std::size_t>& component,
                                            VertexId root, const Arborescence& t) {
  const DirectedGraph& g = f.graph;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId u = g.source(e), w = g.target(e);
    if (component[u] != component[root] || component[w] != component[root]) continue;
    if (t.values[u] + f.weights[e] == t.values[w]) continue;
    Word back = shortest_path(g, component, w, root);
    Word through_tree = tree_path(g, t, root, w);
    through_tree.insert(through_tree.end(), back.begin(), back.end());
    if (!through_tree.empty() && f.sum_over(through_tree) != 0)
      return primitive_witness(f, through_tree);
    Word through_edge = tree_path(g, t, root, u);
    through_edge.push_back(e);
    through_edge.insert(through_edge.end(), back.begin(), back.end());
    return primitive_witness(f, through_edge);
  }
  return std::nullopt;
}

void require_weights(const EdgePotential& f) {
  if (f.weights.size() != f.graph.edge_count())
    throw std::invalid_argument("edge potential is not total on edges");
}

}  // namespace

CycleCheck zero_on_cycles(const EdgePotential& f) {
  require_weights(f);
  const DirectedGraph& g = f.graph;
  SccDecomposition scc = strongly_connected_components(g);
  std::vector<bool> done(scc.count, false);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (done[scc.component[root]]) continue;
    done[scc.component[root]] = true;
    Arborescence t = grow(f, scc.component, root);
    if (auto w = check_component(f, scc.component, root, t)) return CycleCheck{false, std::move(w)};
  }
  return CycleCheck{true, std::nullopt};
}

VertexPotential graph_potential(const EdgePotential& f) {
  require_weights(f);
  const DirectedGraph& g = f.graph;
  if (!is_irreducible(g)) throw NotIrreducible("graph potential needs an irreducible graph");
  std::vector<std::size_t> component(g.vertex_count(), 0);
  Arborescence t = grow(f, component, 0);
  if (auto w = check_component(f, component, 0, t))
    throw CycleObstruction(*w, "cycle '" + format_word(g, w->cycle) + "' has weight sum " +
                                   to_string(w->sum));
  VertexPotential h{std::move(t.values), 0};
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (f.weights[e] != h.values[g.target(e)] - h.values[g.source(e)])
      throw std::logic_error("graph potential failed its edge check");
  return h;
}

const Rational& LocalFunction::operator()(const Word& window) const {
  auto it = table.find(window);
  if (it == table.end()) throw PartialCode("local function undefined on a window");
  return it->second;
}

Word cyclic_window(const Word& cycle, std::ptrdiff_t center, std::size_t radius) {
  const auto n = static_cast<std::ptrdiff_t>(cycle.size());
  Word w;
  w.reserve(2 * radius + 1);
  for (std::ptrdiff_t k = -static_cast<std::ptrdiff_t>(radius);
       k <= static_cast<std::ptrdiff_t>(radius); ++k)
    w.push_back(cycle[static_cast<std::size_t>(((center + k) % n + n) % n)]);
  return w;
}

Rational orbit_sum(const LocalFunction& f, const Word& cycle) {
  Rational s = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    s += f(cyclic_window(cycle, static_cast<std::ptrdiff_t>(i), f.radius));
  return s;
}

LocalFunction coboundary(const EdgeShift& x, const LocalFunction& f) {
  if (!is_irreducible(x)) throw NotIrreducible("coboundary needs an irreducible shift");
  // In the (2r+1)-block presentation f depends on the current edge only.
  HigherBlock hb = higher_block(x, 2 * f.radius + 1);
  EdgePotential weights{hb.shift.graph(), {}};
  for (const Word& path : hb.edge_paths) weights.weights.push_back(f(path));

  VertexPotential h;
  try {
    h = graph_potential(weights);
  } catch (const CycleObstruction& obstruction) {
    PeriodicOrbit orbit = hb.decode(PeriodicOrbit::from_cyclic_word(obstruction.witness().cycle));
    Rational sum = orbit_sum(f, orbit.word());
    throw CycleObstruction(CycleWitness{orbit.word(), sum},
                           "periodic orbit '" + format_word(x.graph(), orbit.word()) +
                               "' has f-sum " + to_string(sum));
  }

  const DirectedGraph& bg = hb.shift.graph();
  LocalFunction b{f.radius, {}};
  for (EdgeId e = 0; e < bg.edge_count(); ++e) b.table.emplace(hb.edge_paths[e], h.values[bg.source(e)]);

  for (const PeriodicOrbit& orbit : periodic_orbits(x, 6)) {
    const Word& w = orbit.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto here = cyclic_window(w, static_cast<std::ptrdiff_t>(i), f.radius);
      auto next = cyclic_window(w, static_cast<std::ptrdiff_t>(i + 1), f.radius);
      if (f(here) != b(next) - b(here)) throw std::logic_error("coboundary failed its orbit check");
    }
  }
  return b;
}

}  // namespace flowcalc
