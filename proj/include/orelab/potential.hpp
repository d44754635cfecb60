#ifndef ORELAB_POTENTIAL_HPP
#define ORELAB_POTENTIAL_HPP

#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "orelab/coloring.hpp"
#include "orelab/fixed.hpp"
#include "orelab/graph.hpp"
#include "orelab/report.hpp"

namespace orelab {

/// 9|V| - 4|E|.
int p_ky(const Graph &g);
/// p_ky of G[r].
int p_ky(const Graph &g, VertexSet r);

/// (9 + eps)|V| - 4|E| - delta T(G), with T computed here or supplied.
Rat21 potential(const Graph &g);
Rat21 potential(const Graph &g, int t);
/// Potential of G[r]; the empty set has potential 0.
Rat21 potential(const Graph &g, VertexSet r);

/// 9x - 4 C(x,2) + x eps for x in 1..4; std::invalid_argument otherwise.
Rat21 f_core(int x);

struct PhiIdentification {
  /// Vertices of G outside R in increasing order, then x_1..x_4.
  Graph graph;
  /// image[v] is the vertex of graph that host vertex v became.
  std::vector<int> image;
  /// origin[i] is the host vertex of i, or -1 for x_1..x_4.
  std::vector<int> origin;
  std::array<int, 4> core{};
  /// Colour classes with no vertex; their x_i is still created and only
  /// touches the other x_j.
  std::array<bool, 4> empty_class{};

  bool has_empty_class() const;
};

/// Identify each colour class of phi on R into x_i and add a K4 on
/// x_1..x_4. Throws std::invalid_argument unless R is a proper subset of
/// V(G) with |R| >= 5 and phi properly 4-colours G[R].
PhiIdentification phi_identify(const Graph &g, VertexSet r, const Coloring &phi);

struct ExtensionRecord {
  Graph host;
  VertexSet r;
  Coloring phi;
  PhiIdentification identified;
  /// The extender W; its origin indexes identified.graph.
  Subgraph extender;
  /// Vertices of W that are some x_i.
  VertexSet core;
  VertexSet r_prime;
  bool complete = false;
  bool spanning = false;

  int core_size() const { return core.size(); }
  bool total() const { return complete && spanning; }
};

/// Build G_phi(R), extract a 5-critical subgraph W and classify the
/// extension. Throws std::logic_error if G_phi(R) is 4-colourable, which
/// cannot happen for a 5-critical host.
ExtensionRecord critical_extension(const Graph &g, VertexSet r, const Coloring &phi);

/// A solver colouring of G[R] after a seeded shuffle, as a colouring of G
/// with V(G) - R uncoloured. Throws std::invalid_argument if G[R] is not
/// 4-colourable.
Coloring random_subset_coloring(const Graph &g, VertexSet r, std::mt19937_64 &rng);

/// Rows ky_extension, extension_core and extension_uniform.
Report verify_extension_inequalities(const ExtensionRecord &rec);

/// For collapsible R with critical complement W:
/// p_G(R) >= p(G) - p(W) + 9 + eps - delta (row collapsible_potential).
Report verify_collapsible_potential(const Graph &g, VertexSet r);

enum class MainCase { K5 = 1, Ore = 2, Other = 3 };

struct MainTheoremResult {
  MainCase which = MainCase::Other;
  int t = 0;
  Rat21 p;
  Report report;
};

/// Classifies G and checks the matching potential bound: p(K5) = 94/21,
/// 21 p <= 91 - n for other 5-Ore graphs and p <= 5 - P otherwise. Triangle-
/// free graphs also get 4|E| >= (9 + eps)|V| - 5. Throws
/// std::invalid_argument if G is not 5-critical.
MainTheoremResult verify_main_theorem(const Graph &g);

/// p_KY(G) <= 5, p_KY(G) >= 3 exactly for 5-Ore graphs, and for 5-Ore G
/// every examined proper R with |R| >= 5 and p_KY(R) < 12 is collapsible
/// with p_KY(R) = 9. At most budget subsets are examined, smallest first.
Report verify_ore5_bounds(const Graph &g, std::size_t budget = 200000);

/// Packing counts across one Ore-composition: T(G) >= T(G1) + T(G2) - 2
/// (composition_packing) and, when a side is K5, T(G) >= T(other side) + 1
/// (composition_k5_side).
Report verify_composition_packing(const std::string &key, int t, int t_edge_side,
                                  int t_vertex_side, bool edge_side_k5,
                                  bool vertex_side_k5);

/// For a 5-Ore G other than K5: 4 T(G) >= |V| + 7 (ore_packing). Every
/// 5-Ore G gets gem_avoids_vertex, and G other than K5 gets gem_avoids_k4.
Report verify_ore_packing_and_gems(const Graph &g);

/// Observational rows only: structural predicates that a minimum
/// counterexample would satisfy.
Report structure_lemma_audit(const Graph &g);

} // namespace orelab

#endif // ORELAB_POTENTIAL_HPP
