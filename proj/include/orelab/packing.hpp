#ifndef ORELAB_PACKING_HPP
#define ORELAB_PACKING_HPP

#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Vertex-disjoint triangles (weight 1) and K4s (weight 2).
struct Packing {
  std::vector<VertexSet> pieces;
  int weight = 0;
};

/// Pieces are disjoint cliques of size 3 or 4 and weight matches them.
bool is_valid_packing(const Graph &g, const Packing &p);

/// All triangles and all K4s of g, K4s first, each group in lexicographic
/// order of sorted vertex lists.
std::vector<VertexSet> clique_pieces(const Graph &g);

struct TNumber {
  int value = 0;
  Packing witness;
};

/// Exact T(G) by branch and bound: branch on the lowest undecided vertex that
/// still lies in a usable piece (every piece through it, or leave it out) and
/// prune with 2*floor(f/4) + [f mod 4 == 3] over the f still-coverable
/// vertices.
TNumber t_number(const Graph &g);

inline constexpr int kOracleMaxOrder = 14;

/// T(G) by dynamic programming over vertex subsets. Independent of
/// t_number's search; throws std::invalid_argument for more than 14 vertices.
int t_number_oracle(const Graph &g);

struct MicWitness {
  VertexSet independent_set;
  int value = 0;
};

/// Maximum over independent sets I of the degree sum of I, by branch and
/// bound with a greedy clique-cover bound.
MicWitness mic(const Graph &g);

} // namespace orelab

#endif // ORELAB_PACKING_HPP
