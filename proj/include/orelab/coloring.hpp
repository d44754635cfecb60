#ifndef ORELAB_COLORING_HPP
#define ORELAB_COLORING_HPP

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Vertex colouring; colours are 0..k-1 and -1 marks an uncoloured vertex
/// (a colouring of G[R] viewed inside G leaves V(G)-R at -1).
struct Coloring {
  std::vector<int> color;

  int operator[](int v) const { return color[v]; }
  int colors_used() const;
  bool operator==(const Coloring &) const = default;
};

/// No edge between two coloured vertices is monochromatic.
bool is_proper(const Graph &g, const Coloring &c);
/// Every vertex of r is coloured with a colour in [0, k) and c is proper on
/// G[r].
bool is_proper_on(const Graph &g, VertexSet r, const Coloring &c, int k = 4);

/// Exact k-colouring (k in 1..4) by DSATUR backtracking per connected
/// component. Deterministic: ties go to the lowest vertex index.
std::optional<Coloring> is_k_colorable(const Graph &g, int k);

/// A k-colouring drawn from the solver after a seeded relabelling of the
/// vertices and a seeded permutation of the colours.
std::optional<Coloring> random_k_coloring(const Graph &g, int k,
                                          std::mt19937_64 &rng);

/// Calls visit on every proper k-colouring of g (colours not reduced by
/// symmetry) until it returns false. Exponential; intended for small graphs.
void for_each_k_coloring(const Graph &g, int k,
                         const std::function<bool(const Coloring &)> &visit);

/// Not 4-colourable, no isolated vertex, and G-e is 4-colourable for every
/// edge e. Edge-criticality plus no isolated vertices is equivalent to every
/// proper subgraph being 4-colourable.
bool is_5_critical(const Graph &g);

/// A 5-critical subgraph: edges are scanned once in descending edge index and
/// dropped whenever the rest stays non-4-colourable, then isolated vertices
/// are removed. Throws std::invalid_argument if g is 4-colourable.
Subgraph extract_5_critical(const Graph &g);

/// Non-adjacent pairs u < v in r with G[r] + uv not 4-colourable. Throws
/// std::invalid_argument unless r is a proper subset of V(G).
std::vector<Edge> identifiable_pairs(const Graph &g, VertexSet r);

struct CollapseReport {
  bool collapsible = false;
  VertexSet boundary;
  /// Proper 4-colouring of G[r] giving two boundary vertices different
  /// colours; present exactly when not collapsible.
  std::optional<Coloring> witness;
  /// Boundary pairs confirmed to force equal colours.
  int pairs_checked = 0;
  /// Every boundary pair u,v has G[r] + uv 5-critical. Only evaluated for
  /// collapsible sets; nothing downstream depends on it.
  bool tight = false;
};

/// r is collapsible when every 4-colouring of G[r] is constant on the
/// boundary of r, equivalently when G[r] + uv is not 4-colourable for each
/// boundary pair. A single boundary vertex is collapsible vacuously.
///
/// Preconditions: r proper, |r| >= 5, G[r] 4-colourable, boundary non-empty
/// (std::invalid_argument / std::domain_error otherwise).
CollapseReport is_collapsible(const Graph &g, VertexSet r);

struct CriticalComplement {
  Graph graph;
  int special = -1;
  /// origin[i] is the vertex of g that vertex i came from; the special vertex
  /// maps to -1.
  std::vector<int> origin;
};

/// Identify the boundary of r to one vertex and delete the rest of r.
/// Throws std::invalid_argument when r is not collapsible.
CriticalComplement critical_complement(const Graph &g, VertexSet r);

} // namespace orelab

#endif // ORELAB_COLORING_HPP
