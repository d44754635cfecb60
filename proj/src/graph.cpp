#include "orelab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orelab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [0, 64]");
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n));
}

} // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(n, VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge &e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (g.rows_[e.u].contains(e.v))
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    g.rows_[e.u].insert(e.v);
    g.rows_[e.v].insert(e.u);
    ++g.m_;
  }
  return g;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (const VertexSet &row : rows_)
    best = std::min(best, row.size());
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const VertexSet &row : rows_)
    best = std::max(best, row.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (int v : rows_[u] - VertexSet::range(u + 1))
      out.push_back({u, v});
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (int v : s)
    twice += (rows_[v] & s).size();
  return twice / 2;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(order(), u);
  check_vertex(order(), v);
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!g.rows_[u].contains(v)) {
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(order(), u);
  check_vertex(order(), v);
  Graph g = *this;
  if (g.rows_[u].contains(v)) {
    g.rows_[u].erase(v);
    g.rows_[v].erase(u);
    --g.m_;
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw std::invalid_argument("permutation size mismatch");
  Graph g(order());
  for (int u = 0; u < order(); ++u)
    for (int v : rows_[u])
      g.rows_[perm[u]].insert(perm[v]);
  g.m_ = m_;
  return g;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.assign(n, VertexSet{});
}

void GraphBuilder::add_edge(int u, int v) {
  check_vertex(order(), u);
  check_vertex(order(), v);
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

Graph GraphBuilder::build() const {
  Graph g(order());
  g.rows_ = rows_;
  int twice = 0;
  for (const VertexSet &row : rows_)
    twice += row.size();
  g.m_ = twice / 2;
  return g;
}

Subgraph induced_subgraph(const Graph &g, VertexSet r) {
  if (r.empty())
    throw std::domain_error("induced subgraph of an empty vertex set");
  if (!r.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  Subgraph out;
  out.origin = r.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.origin.size()); ++i)
    index[out.origin[i]] = i;
  GraphBuilder b(r.size());
  for (int u : r)
    for (int v : g.neighbors(u) & r)
      if (u < v)
        b.add_edge(index[u], index[v]);
  out.graph = b.build();
  return out;
}

Subgraph delete_vertex(const Graph &g, int v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  if (rest.empty())
    return {Graph(0), {}};
  return induced_subgraph(g, rest);
}

Identification identify_vertices(const Graph &g, VertexSet s) {
  if (s.empty())
    throw std::domain_error("identifying an empty vertex set");
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  for (int v : s)
    if (g.neighbors(v).intersects(s))
      throw std::invalid_argument("identifying adjacent vertices");

  const int keep = s.first();
  Identification out;
  out.image.assign(g.order(), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (v == keep || !s.contains(v))
      out.image[v] = next++;
  for (int v : s)
    out.image[v] = out.image[keep];
  out.merged = out.image[keep];

  GraphBuilder b(next);
  for (const Edge &e : g.edges())
    b.add_edge(out.image[e.u], out.image[e.v]);
  out.graph = b.build();
  return out;
}

std::vector<VertexSet> components(const Graph &g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier)
        next |= g.neighbors(v);
      next = (next & left) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

VertexSet boundary(const Graph &g, VertexSet r) {
  VertexSet out;
  const VertexSet outside = g.vertices() - r;
  for (int v : r)
    if (g.neighbors(v).intersects(outside))
      out.insert(v);
  return out;
}

bool is_clique(const Graph &g, VertexSet s) {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v)))
      return false;
  return true;
}

bool is_independent(const Graph &g, VertexSet s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s))
      return false;
  return true;
}

} // namespace orelab
