#include "flowcalc/shift.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "flowcalc/errors.hpp"

namespace flowcalc {

bool is_essential(const DirectedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty() || g.in_edges(v).empty()) return false;
  return true;
}

EdgeShift::EdgeShift(DirectedGraph graph) : graph_(std::move(graph)) {
  if (graph_.edge_count() == 0) throw EmptyShift("edge shift has no edges");
  if (!is_essential(graph_)) throw NotEssential("graph is not essential; trim it first");
}

EdgeId EdgeShift::symbol_id(std::string_view label) const {
  auto e = graph_.find_label(label);
  if (!e) throw UnknownSymbol("unknown symbol '" + std::string(label) + "'");
  return *e;
}

bool is_composable(const DirectedGraph& g, const Word& w) {
  for (EdgeId e : w)
    if (e >= g.edge_count()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (g.target(w[i]) != g.source(w[i + 1])) return false;
  return true;
}

bool is_cycle(const DirectedGraph& g, const Word& w) {
  return !w.empty() && is_composable(g, w) && g.target(w.back()) == g.source(w.front());
}

std::string format_word(const DirectedGraph& g, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += g.label(w[i]);
  }
  return s;
}

Word parse_word(const DirectedGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string token;
  while (in >> token) {
    auto e = g.find_label(token);
    if (!e) throw UnknownSymbol("unknown symbol '" + token + "'");
    w.push_back(*e);
  }
  return w;
}

std::size_t least_period(const Word& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = cycle[i] == cycle[i - p];
    if (ok) return p;
  }
  return n;
}

std::size_t least_rotation_index(const Word& cycle) {
  const std::size_t n = cycle.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      EdgeId a = cycle[(s + k) % n], b = cycle[(best + k) % n];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  return best;
}

Word rotate(const Word& cycle, std::size_t start) {
  Word out(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) out[i] = cycle[(start + i) % cycle.size()];
  return out;
}

PeriodicOrbit PeriodicOrbit::from_cyclic_word(const Word& cycle) {
  if (cycle.empty()) throw InvalidWord("empty cycle");
  Word root(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(least_period(cycle)));
  PeriodicOrbit orbit;
  orbit.word_ = rotate(root, least_rotation_index(root));
  return orbit;
}

PeriodicOrbit PeriodicOrbit::from_cycle(const DirectedGraph& g, const Word& cycle) {
  if (!is_cycle(g, cycle)) throw InvalidWord("word is not a closed path");
  return from_cyclic_word(cycle);
}

DirectedGraph trim_essential(const DirectedGraph& g) {
  std::vector<bool> alive(g.vertex_count(), true);
  std::vector<std::size_t> in_deg(g.vertex_count(), 0), out_deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++out_deg[e.source];
    ++in_deg[e.target];
  }
  std::deque<VertexId> dead;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_deg[v] == 0 || out_deg[v] == 0) {
      alive[v] = false;
      dead.push_back(v);
    }
  while (!dead.empty()) {
    VertexId v = dead.front();
    dead.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId t = g.target(e);
      if (alive[t] && --in_deg[t] == 0) {
        alive[t] = false;
        dead.push_back(t);
      }
    }
    for (EdgeId e : g.in_edges(v)) {
      VertexId s = g.source(e);
      if (alive[s] && --out_deg[s] == 0) {
        alive[s] = false;
        dead.push_back(s);
      }
    }
  }
  std::vector<std::string> vertices;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (alive[v]) {
      remap[v] = vertices.size();
      vertices.push_back(g.vertices()[v]);
    }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (alive[e.source] && alive[e.target])
      edges.push_back(Edge{e.id, remap[e.source], remap[e.target], e.label});
  if (edges.empty()) throw EmptyShift("graph has no bi-infinite path");
  return DirectedGraph(std::move(vertices), std::move(edges));
}

bool is_irreducible(const DirectedGraph& g) {
  if (g.vertex_count() == 0) return false;
  return strongly_connected_components(g).count == 1;
}

std::set<PeriodicOrbit> periodic_orbits(const EdgeShift& x, std::size_t max_period) {
  const DirectedGraph& g = x.graph();
  std::set<PeriodicOrbit> result;
  Word path;
  // A canonical word starts with its least symbol, so from first edge e0 only
  // edges >= e0 are explored.
  std::function<void(EdgeId)> extend = [&](EdgeId first) {
    VertexId at = g.target(path.back());
    if (at == g.source(first)) {
      if (least_period(path) == path.size() && least_rotation_index(path) == 0)
        result.insert(PeriodicOrbit::from_cyclic_word(path));
    }
    if (path.size() == max_period) return;
    for (EdgeId e : g.out_edges(at)) {
      if (e < first) continue;
      path.push_back(e);
      extend(first);
      path.pop_back();
    }
  };
  for (EdgeId e = 0; e < g.edge_count() && max_period > 0; ++e) {
    path.assign(1, e);
    extend(e);
  }
  return result;
}

Integer fixed_point_count(const std::set<PeriodicOrbit>& orbits, std::size_t n) {
  Integer total = 0;
  for (const auto& o : orbits)
    if (n % o.period() == 0) total += static_cast<unsigned long>(o.period());
  return total;
}

std::set<Word> words_of_length(const DirectedGraph& g, std::size_t n) {
  std::set<Word> result;
  if (n == 0) {
    result.insert(Word{});
    return result;
  }
  Word path;
  std::function<void()> extend = [&]() {
    if (path.size() == n) {
      result.insert(path);
      return;
    }
    for (EdgeId e : g.out_edges(g.target(path.back()))) {
      path.push_back(e);
      extend();
      path.pop_back();
    }
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    path.assign(1, e);
    extend();
  }
  return result;
}

std::set<Word> words_of_length(const EdgeShift& x, std::size_t n) {
  return words_of_length(x.graph(), n);
}

namespace {

std::string join_labels(const DirectedGraph& g, const Word& w, bool single_char) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_char) s += '.';
    s += g.label(w[i]);
  }
  return s;
}

}  // namespace

HigherBlock higher_block(const EdgeShift& x, std::size_t m) {
  if (m == 0) throw std::invalid_argument("block length must be positive");
  const DirectedGraph& g = x.graph();
  HigherBlock hb{x, {}, {}, {}, m};
  if (m == 1) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      hb.edge_paths.push_back(Word{e});
      hb.edge_index.emplace(Word{e}, e);
    }
    return hb;
  }
  bool single_char = std::all_of(g.edges().begin(), g.edges().end(),
                                 [](const Edge& e) { return e.label.size() == 1; });
  std::set<Word> vertex_words = words_of_length(g, m - 1);
  std::set<Word> edge_words = words_of_length(g, m);
  std::map<Word, VertexId> vertex_index;
  std::vector<std::string> vertex_names;
  for (const Word& w : vertex_words) {
    vertex_index.emplace(w, hb.vertex_paths.size());
    hb.vertex_paths.push_back(w);
    vertex_names.push_back(join_labels(g, w, single_char));
  }
  std::vector<Edge> edges;
  for (const Word& w : edge_words) {
    Word head(w.begin(), w.end() - 1), tail(w.begin() + 1, w.end());
    std::string name = join_labels(g, w, single_char);
    hb.edge_index.emplace(w, edges.size());
    hb.edge_paths.push_back(w);
    edges.push_back(Edge{name, vertex_index.at(head), vertex_index.at(tail), name});
  }
  hb.shift = EdgeShift(trim_essential(DirectedGraph(std::move(vertex_names), std::move(edges))));
  // Trimming is a no-op on the block graph of an essential graph; indices are unchanged.
  return hb;
}

EdgeId HigherBlock::edge_for(const Word& path) const {
  auto it = edge_index.find(path);
  if (it == edge_index.end()) throw InvalidWord("not a path of the block presentation");
  return it->second;
}

PeriodicOrbit HigherBlock::encode(const PeriodicOrbit& x) const {
  const Word& w = x.word();
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word block(block_length);
    for (std::size_t k = 0; k < block_length; ++k) block[k] = w[(i + k) % w.size()];
    out.push_back(edge_for(block));
  }
  return PeriodicOrbit::from_cyclic_word(out);
}

PeriodicOrbit HigherBlock::decode(const PeriodicOrbit& y) const {
  Word out;
  for (EdgeId e : y.word()) out.push_back(edge_paths.at(e).front());
  return PeriodicOrbit::from_cyclic_word(out);
}

}  // namespace flowcalc
