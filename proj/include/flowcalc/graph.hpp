#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowcalc/matrix.hpp"

namespace flowcalc {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  std::string id;
  VertexId source = 0;
  VertexId target = 0;
  std::string label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite directed multigraph with declared vertex and edge orderings.
/// Edge labels are pairwise distinct: the label set is the alphabet of the edge shift.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  /// Throws InvalidGraph on duplicate vertex ids, edge ids or labels, or dangling endpoints.
  DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// One vertex per row, A[u][v] parallel edges u->v labelled a, b, ..., z, aa, ab, ...
  /// in row-major order. Vertex ids are "0", "1", ...
  static DirectedGraph from_matrix(const IntMatrix& a);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::string& label(EdgeId e) const { return edges_.at(e).label; }
  VertexId source(EdgeId e) const { return edges_[e].source; }
  VertexId target(EdgeId e) const { return edges_[e].target; }
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  std::optional<EdgeId> find_label(std::string_view label) const;
  std::optional<EdgeId> find_edge_id(std::string_view id) const;
  std::optional<VertexId> find_vertex(std::string_view id) const;

  IntMatrix adjacency() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::map<std::string, EdgeId, std::less<>> by_label_;
  std::map<std::string, EdgeId, std::less<>> by_edge_id_;
  std::map<std::string, VertexId, std::less<>> by_vertex_;
};

/// Incremental construction keyed by string ids; edge id defaults to the label.
class GraphBuilder {
 public:
  GraphBuilder& vertex(std::string id);
  /// Declares missing endpoints on the fly.
  GraphBuilder& edge(std::string label, const std::string& source, const std::string& target);
  GraphBuilder& edge(std::string id, std::string label, const std::string& source,
                     const std::string& target);
  DirectedGraph build() const;

 private:
  VertexId ensure(const std::string& id);
  std::vector<std::string> vertices_;
  std::map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
};

/// Strongly connected components (Tarjan); component[v] numbers components in
/// reverse topological order of the condensation.
struct SccDecomposition {
  std::vector<std::size_t> component;
  std::size_t count = 0;
};
SccDecomposition strongly_connected_components(const DirectedGraph& g);

/// True iff some bijection of vertices carries every edge of `a` to the edge of `b`
/// with the same label (labels fix the edge correspondence).
bool label_isomorphic(const DirectedGraph& a, const DirectedGraph& b);

/// Spreadsheet-style names: 0 -> "a", 25 -> "z", 26 -> "aa", ...
std::string alphabetic_label(std::size_t index);

/// `base` if unused by `taken`, otherwise `base` followed by the first free numeric suffix.
template <class Pred>
std::string fresh_name(const std::string& base, Pred taken) {
  if (!taken(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace flowcalc
