#ifndef ORELAB_GRAPH_HPP
#define ORELAB_GRAPH_HPP

#include <compare>
#include <span>
#include <vector>

#include "orelab/vertex_set.hpp"

namespace orelab {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge &) const = default;
};

class GraphBuilder;

/// Simple undirected graph on at most 64 vertices with bitset rows.
///
/// Values are immutable once built; every "modifying" operation returns a
/// fresh graph. Vertices are 0..order()-1.
class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, repeated edges or endpoints out of
  /// range.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int min_degree() const;
  int max_degree() const;

  /// Edges (u < v) in lexicographic order; position in this list is the
  /// "edge index" used throughout.
  std::vector<Edge> edges() const;
  /// Number of edges with both ends in s.
  int edges_within(VertexSet s) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph &) const = default;

private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
  int m_ = 0;
};

/// Accumulates edges; repeated edges are merged silently, loops are rejected.
class GraphBuilder {
public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  int order() const { return static_cast<int>(rows_.size()); }
  Graph build() const;

private:
  std::vector<VertexSet> rows_;
};

/// A graph together with, for each of its vertices, the vertex of the host
/// graph it came from.
struct Subgraph {
  Graph graph;
  std::vector<int> origin;
};

/// G[R]. Throws std::domain_error when R is empty and std::invalid_argument
/// when R is not contained in V(G).
Subgraph induced_subgraph(const Graph &g, VertexSet r);
/// G - v.
Subgraph delete_vertex(const Graph &g, int v);

struct Identification {
  Graph graph;
  /// image[v] is the vertex of the result that v of the input became.
  std::vector<int> image;
  int merged = -1;
};

/// Merge the vertices of s into one vertex (placed at the position of the
/// smallest member); parallel edges are dropped. Throws std::invalid_argument
/// with "identifying adjacent vertices" if two members of s are adjacent.
Identification identify_vertices(const Graph &g, VertexSet s);

/// Vertices of g[within] reachable from each other, one set per component.
std::vector<VertexSet> components(const Graph &g, VertexSet within);
inline std::vector<VertexSet> components(const Graph &g) {
  return components(g, g.vertices());
}

/// Vertices of g that have a neighbour outside r.
VertexSet boundary(const Graph &g, VertexSet r);

bool is_clique(const Graph &g, VertexSet s);
bool is_independent(const Graph &g, VertexSet s);

} // namespace orelab

#endif // ORELAB_GRAPH_HPP
