#ifndef ORELAB_ORE_HPP
#define ORELAB_ORE_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/canon.hpp"
#include "orelab/graph.hpp"

namespace orelab {

/// Build tree of a 5-Ore graph: a K5 leaf, or an Ore-composition of two
/// recipes. Vertex and edge indices of a composition node refer to the
/// canonical labelling (canonical_form) of the materialised side.
class OreRecipe {
public:
  /// The K5 leaf.
  OreRecipe() = default;

  /// Delete replaced_edge = (x, y) from the edge side, split split_vertex of
  /// the vertex side so that its neighbours in to_first join x and those in
  /// to_second join y.
  static OreRecipe compose(OreRecipe edge_side, Edge replaced_edge,
                           OreRecipe vertex_side, int split_vertex,
                           VertexSet to_first, VertexSet to_second);

  bool is_leaf() const { return node_ == nullptr; }
  const OreRecipe &edge_side() const;
  const OreRecipe &vertex_side() const;
  Edge replaced_edge() const;
  int split_vertex() const;
  VertexSet to_first() const;
  VertexSet to_second() const;

  int leaves() const;
  /// Vertices of the materialised graph: 4 * leaves + 1.
  int order() const { return 4 * leaves() + 1; }

  /// One-line s-expression, e.g.
  /// "(compose (k5) e=0-1 (k5) z=0 split=1|2,3,4)".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument with the offending
  /// character offset.
  static OreRecipe parse(std::string_view text);

  bool operator==(const OreRecipe &other) const;

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct OreRecipe::Node {
  OreRecipe edge_side;
  Edge replaced_edge;
  OreRecipe vertex_side;
  int split_vertex = 0;
  VertexSet to_first;
  VertexSet to_second;
};

inline const OreRecipe &OreRecipe::edge_side() const { return node_->edge_side; }
inline const OreRecipe &OreRecipe::vertex_side() const { return node_->vertex_side; }
inline Edge OreRecipe::replaced_edge() const { return node_->replaced_edge; }
inline int OreRecipe::split_vertex() const { return node_->split_vertex; }
inline VertexSet OreRecipe::to_first() const { return node_->to_first; }
inline VertexSet OreRecipe::to_second() const { return node_->to_second; }

Graph complete_graph(int n);

/// One Ore-composition. The result keeps the edge side's labels, then the
/// vertex side's vertices other than z in increasing order. Throws
/// std::invalid_argument if xy is not an edge, z is out of range, or
/// (to_x, to_y) is not a partition of N(z) into two non-empty parts.
Graph ore_composition(const Graph &edge_side, Edge xy, const Graph &vertex_side,
                      int z, VertexSet to_x, VertexSet to_y);

struct MaterializedOre {
  Graph graph;
  /// leaf[v] is the index (left-to-right) of the K5 leaf vertex v came from;
  /// identified vertices keep the edge side's leaf.
  std::vector<int> leaf;
};

MaterializedOre ore_compose(const OreRecipe &recipe);

struct OreClass {
  Graph graph; ///< canonical labelling
  CanonKey key;
  OreRecipe recipe;
};

/// Reported for every composition tried during enumeration.
struct CompositionEvent {
  const OreClass &edge_side;
  const OreClass &vertex_side;
  const OreClass &result;
  bool first_seen = false;
};

/// Every isomorphism class of 5-Ore graphs on at most max_n vertices, in
/// order of increasing size and then discovery. Classes of n vertices come
/// from all compositions of classes with n1 + n2 - 1 = n: every edge of the
/// edge side (both orientations) and every split of every vertex of the
/// vertex side. Optional callbacks see each new class and each composition.
std::vector<OreClass> enumerate_5_ore(
    int max_n, const std::function<void(const OreClass &)> &on_class = {},
    const std::function<void(const CompositionEvent &)> &on_composition = {});

/// A recipe whose materialisation is isomorphic to g, or nullopt when g is
/// not 5-Ore. Results are memoised by canonical key (thread-safe).
std::optional<OreRecipe> is_5_ore(const Graph &g);

struct GemReport {
  /// Vertex sets inducing K5-e whose three vertices off the missing edge have
  /// degree 4 in G.
  std::vector<VertexSet> diamonds;
  /// K4s whose vertices all have degree 4 in G.
  std::vector<VertexSet> emeralds;

  bool ungemmed() const { return diamonds.empty() && emeralds.empty(); }
  /// Some diamond or emerald avoids every vertex of s.
  bool has_gem_avoiding(VertexSet s) const;
};

GemReport gems(const Graph &g);

/// Proper subsets R whose boundary is exactly two non-adjacent vertices u, v
/// with G[R] + uv 5-Ore, in increasing bitset order.
std::vector<VertexSet> ore_collapsible_subsets(const Graph &g);

struct AlmostOre {
  Graph graph;
  VertexSet special;
  std::vector<int> origin;
};

/// G - v for v in a cluster of size >= 2; the rest of the cluster is
/// special. Throws std::invalid_argument otherwise.
AlmostOre almost_5_ore_from(const Graph &g5ore, int v);

struct FrameBar {
  Edge corners;          ///< the replaced edge of the frame (u < v)
  Graph bar;             ///< 5-Ore graph
  int split_vertex = -1; ///< vertex of bar that became both corners
  /// origin[i] is the vertex of H that bar vertex i is; -1 for split_vertex.
  std::vector<int> origin;
  /// Bar vertices that are neighbours of corners.u in H.
  VertexSet to_first;
};

struct Frame {
  int special = -1;
  std::array<int, 4> corners{}; ///< special first, then its neighbours
  std::vector<FrameBar> bars;   ///< frame edges not listed are plain edges
};

/// A frame with special vertex w: J = K4 on w and its three neighbours, each
/// component of H - V(J) a bar hanging on one frame edge. nullopt when w
/// does not have degree 3 in H or no frame exists.
std::optional<Frame> find_frame(const Graph &h, int w);

/// H rebuilt from a frame on the original vertex ids.
Graph reconstruct_from_frame(const Frame &frame, int order);

} // namespace orelab

#endif // ORELAB_ORE_HPP
