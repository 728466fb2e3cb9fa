#include "flowcalc/moves.hpp"

#include <set>

#include "flowcalc/errors.hpp"

namespace flowcalc {

ExpansionResult symbol_expansion(const EdgeShift& x, const std::string& symbol) {
  const DirectedGraph& g = x.graph();
  EdgeId s = x.symbol_id(symbol);

  std::string fresh = fresh_name(symbol + "'", [&](const std::string& c) {
    return g.find_label(c).has_value() || g.find_edge_id(c).has_value();
  });
  std::string fresh_vertex =
      fresh_name(fresh, [&](const std::string& c) { return g.find_vertex(c).has_value(); });

  std::vector<std::string> vertices = g.vertices();
  const VertexId w = vertices.size();
  vertices.push_back(fresh_vertex);

  // The new edge sits right after s in the edge order.
  std::vector<Edge> edges;
  std::vector<EdgeId> remap(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge copy = g.edge(e);
    remap[e] = edges.size();
    if (e == s) {
      VertexId v = copy.target;
      copy.target = w;
      edges.push_back(copy);
      edges.push_back(Edge{fresh, w, v, fresh});
    } else {
      edges.push_back(copy);
    }
  }

  ExpansionRecord record{symbol, fresh, fresh_vertex, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == s) record.symbol_map[e] = Word{remap[e], remap[e] + 1};
    else record.symbol_map[e] = Word{remap[e]};
  }
  return ExpansionResult{EdgeShift(DirectedGraph(std::move(vertices), std::move(edges))),
                         std::move(record)};
}

SplitResult out_split(const EdgeShift& x, const std::string& vertex,
                      const std::vector<std::vector<std::string>>& partition) {
  const DirectedGraph& g = x.graph();
  auto v_opt = g.find_vertex(vertex);
  if (!v_opt) throw BadPartition("unknown vertex '" + vertex + "'");
  const VertexId v = *v_opt;
  const std::size_t k = partition.size();
  if (k == 0) throw BadPartition("partition has no classes");

  std::map<EdgeId, std::size_t> class_of;
  for (std::size_t c = 0; c < k; ++c) {
    if (partition[c].empty()) throw BadPartition("partition class " + std::to_string(c) + " is empty");
    for (const auto& label : partition[c]) {
      auto e = g.find_label(label);
      if (!e || g.source(*e) != v)
        throw BadPartition("'" + label + "' is not an out-edge of '" + vertex + "'");
      if (!class_of.emplace(*e, c).second)
        throw BadPartition("'" + label + "' appears in two classes");
    }
  }
  if (class_of.size() != g.out_edges(v).size())
    throw BadPartition("partition does not cover the out-edges of '" + vertex + "'");

  auto taken_vertex = [&](const std::string& c) { return g.find_vertex(c).has_value(); };
  auto taken_label = [&](const std::string& c) {
    return g.find_label(c).has_value() || g.find_edge_id(c).has_value();
  };

  // Vertex v is replaced in place by its first copy; further copies are appended.
  std::vector<std::string> vertices = g.vertices();
  std::vector<VertexId> copy_of(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::string name = k == 1 ? vertex : fresh_name(vertex + "_" + std::to_string(c + 1), taken_vertex);
    if (c == 0) {
      vertices[v] = name;
      copy_of[c] = v;
    } else {
      copy_of[c] = vertices.size();
      vertices.push_back(name);
    }
  }

  std::vector<Edge> edges;
  std::map<std::pair<EdgeId, std::size_t>, EdgeId> split_edge;  // (edge, target copy) -> new edge
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& old = g.edge(e);
    VertexId src = old.source == v ? copy_of[class_of.at(e)] : old.source;
    if (old.target != v || k == 1) {
      split_edge[{e, 0}] = edges.size();
      VertexId tgt = old.target == v ? copy_of[0] : old.target;
      edges.push_back(Edge{old.id, src, tgt, old.label});
      continue;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::string label = fresh_name(old.label + "_" + std::to_string(c + 1), taken_label);
      std::string id = fresh_name(old.id + "_" + std::to_string(c + 1), taken_label);
      split_edge[{e, c}] = edges.size();
      edges.push_back(Edge{id, src, copy_of[c], label});
    }
  }
  EdgeShift split(DirectedGraph(std::move(vertices), std::move(edges)));

  // Forward: an edge into v is copied according to the class of the following edge.
  std::map<Word, EdgeId> forward;
  for (const Word& w : words_of_length(x, 2)) {
    EdgeId e = w[0];
    std::size_t c = (g.target(e) == v && k > 1) ? class_of.at(w[1]) : 0;
    forward.emplace(w, split_edge.at({e, c}));
  }
  std::map<Word, EdgeId> backward;
  for (const auto& [key, image] : split_edge) backward.emplace(Word{image}, key.first);

  return SplitResult{split, BlockCode(x, split, 0, 1, std::move(forward)),
                     BlockCode(split, x, 0, 0, std::move(backward))};
}

}  // namespace flowcalc
