#ifndef ORELAB_CONSTRUCTIONS_HPP
#define ORELAB_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

Graph cycle_graph(int n);
Graph empty_graph(int n);
/// a's vertices, then b's, joined by every cross edge.
Graph join(const Graph &a, const Graph &b);
Graph disjoint_union(const Graph &a, const Graph &b);
/// Vertices v_0..v_{n-1}, shadows u_0..u_{n-1} (u_i adjacent to N(v_i)), and
/// a hub adjacent to every shadow.
Graph mycielskian(const Graph &g);
Graph groetzsch_graph();

/// Built-in witnesses: "k5", "c5_join_k2", "groetzsch",
/// "mycielski_groetzsch", "k1_join_groetzsch".
std::optional<Graph> named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

} // namespace orelab

#endif // ORELAB_CONSTRUCTIONS_HPP
