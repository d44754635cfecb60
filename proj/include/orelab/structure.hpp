#ifndef ORELAB_STRUCTURE_HPP
#define ORELAB_STRUCTURE_HPP

#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Components of the subgraph induced by the degree-4 vertices.
struct D4Components {
  std::vector<VertexSet> components;
  int singles = 0; ///< components of size one (S)
  int pairs = 0;   ///< components of size two (M)
};

D4Components d4_components(const Graph &g);

/// Maximal set of degree-4 vertices sharing one closed neighbourhood.
struct Cluster {
  VertexSet vertices;
  VertexSet closed_neighborhood;
};

/// Partition of the degree-4 vertices into clusters, ordered by smallest
/// member.
std::vector<Cluster> clusters(const Graph &g);

/// Cluster sizes sorted in decreasing order.
std::vector<int> cluster_profile(const Graph &g);

enum class SizeOrder { HSmaller, GSmaller, EqualRank };

/// H is smaller than G when it has fewer vertices, or as many vertices and
/// more edges, or equal counts and a lexicographically smaller decreasing
/// cluster-size sequence. Sequences of unequal length are padded with zeros.
SizeOrder compare_smaller(const Graph &g, const Graph &h);

/// True when g stays connected after deleting any set of fewer than k
/// vertices (and has more than k vertices).
bool is_k_connected(const Graph &g, int k);

} // namespace orelab

#endif // ORELAB_STRUCTURE_HPP
