#include "orelab/packing.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace orelab {

namespace {

int piece_weight(VertexSet p) { return p.size() == 4 ? 2 : 1; }

// Upper bound on the packing weight that fits in f vertices: a K4 earns 1/2
// per vertex, a triangle 1/3.
int weight_bound(int f) { return 2 * (f / 4) + (f % 4 == 3 ? 1 : 0); }

} // namespace

bool is_valid_packing(const Graph &g, const Packing &p) {
  VertexSet used;
  int weight = 0;
  for (VertexSet piece : p.pieces) {
    if (piece.size() != 3 && piece.size() != 4)
      return false;
    if (!piece.subset_of(g.vertices()) || !is_clique(g, piece))
      return false;
    if (piece.intersects(used))
      return false;
    used |= piece;
    weight += piece_weight(piece);
  }
  return weight == p.weight;
}

std::vector<VertexSet> clique_pieces(const Graph &g) {
  std::vector<VertexSet> k4s, triangles;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const VertexSet above_a = g.neighbors(a) - VertexSet::range(a + 1);
    for (int b : above_a) {
      const VertexSet common_ab = above_a & g.neighbors(b);
      for (int c : common_ab - VertexSet::range(b + 1)) {
        triangles.push_back({a, b, c});
        for (int d : (common_ab & g.neighbors(c)) - VertexSet::range(c + 1))
          k4s.push_back({a, b, c, d});
      }
    }
  }
  // Generation order is already lexicographic on sorted vertex lists.
  k4s.insert(k4s.end(), triangles.begin(), triangles.end());
  return k4s;
}

namespace {

class PackingSearch {
public:
  explicit PackingSearch(const Graph &g) : pieces_(clique_pieces(g)) {}

  TNumber run(VertexSet all) {
    std::vector<int> chosen;
    search(all, 0, chosen);
    TNumber out;
    out.value = std::max(best_, 0);
    for (int i : best_pieces_)
      out.witness.pieces.push_back(pieces_[i]);
    out.witness.weight = out.value;
    return out;
  }

private:
  void search(VertexSet free, int weight, std::vector<int> &chosen) {
    VertexSet coverable;
    for (VertexSet p : pieces_)
      if (p.subset_of(free))
        coverable |= p;
    if (weight + weight_bound(coverable.size()) <= best_)
      return;
    if (coverable.empty()) {
      best_ = weight;
      best_pieces_ = chosen;
      return;
    }
    const int v = coverable.first();
    for (int i = 0; i < static_cast<int>(pieces_.size()); ++i) {
      const VertexSet p = pieces_[i];
      if (!p.contains(v) || !p.subset_of(free))
        continue;
      chosen.push_back(i);
      search(free - p, weight + piece_weight(p), chosen);
      chosen.pop_back();
    }
    free.erase(v);
    search(free, weight, chosen);
  }

  std::vector<VertexSet> pieces_;
  int best_ = -1;
  std::vector<int> best_pieces_;
};

} // namespace

TNumber t_number(const Graph &g) { return PackingSearch(g).run(g.vertices()); }

int t_number_oracle(const Graph &g) {
  const int n = g.order();
  if (n > kOracleMaxOrder)
    throw std::invalid_argument("t_number_oracle supports at most 14 vertices");
  // Brute-force clique listing, separate from clique_pieces.
  std::vector<std::vector<std::uint32_t>> through(n);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    if (k != 3 && k != 4)
      continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v))
          clique = false;
    if (clique)
      through[std::countr_zero(mask)].push_back(mask);
  }
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  memo[0] = 0;
  // Subsets in increasing numeric order: every proper subset comes first.
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int v = std::countr_zero(mask);
    int best = memo[mask & (mask - 1)];
    for (std::uint32_t p : through[v])
      if ((p & mask) == p)
        best = std::max(best, (std::popcount(p) == 4 ? 2 : 1) + memo[mask & ~p]);
    memo[mask] = static_cast<std::int8_t>(best);
  }
  return memo[(std::size_t{1} << n) - 1];
}

namespace {

class MicSearch {
public:
  explicit MicSearch(const Graph &g) : g_(g) {}

  MicWitness run() {
    search(g_.vertices(), 0, VertexSet{});
    return {best_set_, std::max(best_, 0)};
  }

private:
  int clique_cover_bound(VertexSet p) const {
    int bound = 0;
    while (!p.empty()) {
      const int v = p.first();
      VertexSet clique = VertexSet::single(v);
      VertexSet cand = g_.neighbors(v) & p;
      int heaviest = g_.degree(v);
      while (!cand.empty()) {
        const int u = cand.first();
        clique.insert(u);
        heaviest = std::max(heaviest, g_.degree(u));
        cand &= g_.neighbors(u);
      }
      bound += heaviest;
      p -= clique;
    }
    return bound;
  }

  void search(VertexSet p, int value, VertexSet chosen) {
    if (p.empty()) {
      if (value > best_) {
        best_ = value;
        best_set_ = chosen;
      }
      return;
    }
    if (value + clique_cover_bound(p) <= best_)
      return;
    int v = -1;
    for (int u : p)
      if (v < 0 || g_.degree(u) > g_.degree(v))
        v = u;
    VertexSet with = chosen;
    with.insert(v);
    search(p - g_.neighbors(v) - VertexSet::single(v), value + g_.degree(v),
           with);
    p.erase(v);
    search(p, value, chosen);
  }

  const Graph &g_;
  int best_ = -1;
  VertexSet best_set_;
};

} // namespace

MicWitness mic(const Graph &g) { return MicSearch(g).run(); }

} // namespace orelab
