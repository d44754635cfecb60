#include "orelab/constructions.hpp"

#include "orelab/ore.hpp"

namespace orelab {

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

GraphBuilder union_builder(const Graph &a, const Graph &b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (const Edge &e : a.edges())
    out.add_edge(e.u, e.v);
  for (const Edge &e : b.edges())
    out.add_edge(na + e.u, na + e.v);
  return out;
}

} // namespace

Graph disjoint_union(const Graph &a, const Graph &b) {
  return union_builder(a, b).build();
}

Graph join(const Graph &a, const Graph &b) {
  GraphBuilder out = union_builder(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v)
      out.add_edge(u, a.order() + v);
  return out.build();
}

Graph mycielskian(const Graph &g) {
  const int n = g.order();
  GraphBuilder b(2 * n + 1);
  for (const Edge &e : g.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(n + e.u, e.v);
    b.add_edge(n + e.v, e.u);
  }
  for (int i = 0; i < n; ++i)
    b.add_edge(n + i, 2 * n);
  return b.build();
}

Graph groetzsch_graph() { return mycielskian(cycle_graph(5)); }

std::optional<Graph> named_graph(std::string_view name) {
  if (name == "k5")
    return complete_graph(5);
  if (name == "c5_join_k2")
    return join(cycle_graph(5), complete_graph(2));
  if (name == "groetzsch")
    return groetzsch_graph();
  if (name == "mycielski_groetzsch")
    return mycielskian(groetzsch_graph());
  if (name == "k1_join_groetzsch")
    return join(complete_graph(1), groetzsch_graph());
  return std::nullopt;
}

std::vector<std::string> named_graph_names() {
  return {"k5", "c5_join_k2", "groetzsch", "mycielski_groetzsch",
          "k1_join_groetzsch"};
}

} // namespace orelab
