#include "flowcalc/graph.hpp"

#include <algorithm>
#include <functional>

#include "flowcalc/errors.hpp"

namespace flowcalc {

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty()) throw InvalidGraph("empty vertex id");
    if (!by_vertex_.emplace(vertices_[v], v).second)
      throw InvalidGraph("duplicate vertex '" + vertices_[v] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.label.empty() || edge.id.empty()) throw InvalidGraph("empty edge id or label");
    if (edge.source >= vertices_.size() || edge.target >= vertices_.size())
      throw InvalidGraph("edge '" + edge.id + "' has an undeclared endpoint");
    if (!by_label_.emplace(edge.label, e).second)
      throw InvalidGraph("duplicate edge label '" + edge.label + "'");
    if (!by_edge_id_.emplace(edge.id, e).second)
      throw InvalidGraph("duplicate edge id '" + edge.id + "'");
    out_[edge.source].push_back(e);
    in_[edge.target].push_back(e);
  }
}

std::string alphabetic_label(std::size_t index) {
  std::string s;
  ++index;
  while (index > 0) {
    --index;
    s.insert(s.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  }
  return s;
}

DirectedGraph DirectedGraph::from_matrix(const IntMatrix& a) {
  if (!a.is_nonnegative()) throw InvalidGraph("adjacency matrix has a negative entry");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < a.size(); ++i) vertices.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (Integer k = 0; k < a(i, j); ++k) {
        std::string name = alphabetic_label(edges.size());
        edges.push_back(Edge{name, i, j, name});
      }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

std::optional<EdgeId> DirectedGraph::find_label(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> DirectedGraph::find_edge_id(std::string_view id) const {
  auto it = by_edge_id_.find(id);
  if (it == by_edge_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view id) const {
  auto it = by_vertex_.find(id);
  if (it == by_vertex_.end()) return std::nullopt;
  return it->second;
}

IntMatrix DirectedGraph::adjacency() const {
  IntMatrix a(vertices_.size());
  for (const Edge& e : edges_) a(e.source, e.target) += 1;
  return a;
}

GraphBuilder& GraphBuilder::vertex(std::string id) {
  ensure(id);
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string label, const std::string& source,
                                 const std::string& target) {
  std::string id = label;
  return edge(std::move(id), std::move(label), source, target);
}

GraphBuilder& GraphBuilder::edge(std::string id, std::string label, const std::string& source,
                                 const std::string& target) {
  VertexId s = ensure(source);
  VertexId t = ensure(target);
  edges_.push_back(Edge{std::move(id), s, t, std::move(label)});
  return *this;
}

DirectedGraph GraphBuilder::build() const { return DirectedGraph(vertices_, edges_); }

VertexId GraphBuilder::ensure(const std::string& id) {
  auto [it, inserted] = index_.emplace(id, vertices_.size());
  if (inserted) vertices_.push_back(id);
  return it->second;
}

SccDecomposition strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  SccDecomposition result;
  result.component.assign(n, 0);
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next out-edge position).
  std::vector<std::pair<VertexId, std::size_t>> frames;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& out = g.out_edges(v);
      if (pos < out.size()) {
        VertexId w = g.target(out[pos++]);
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      VertexId finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
      if (low[finished] == index[finished]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != finished);
        ++result.count;
      }
    }
  }
  return result;
}

bool label_isomorphic(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward(a.vertex_count(), unset), backward(b.vertex_count(), unset);
  auto bind = [&](VertexId u, VertexId v) {
    if (forward[u] == unset && backward[v] == unset) {
      forward[u] = v;
      backward[v] = u;
      return true;
    }
    return forward[u] == v && backward[v] == u;
  };
  for (const Edge& e : a.edges()) {
    auto f = b.find_label(e.label);
    if (!f) return false;
    if (!bind(e.source, b.source(*f)) || !bind(e.target, b.target(*f))) return false;
  }
  // Vertices without edges pair off arbitrarily; counts already agree.
  return true;
}

}  // namespace flowcalc
