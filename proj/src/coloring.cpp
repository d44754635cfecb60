#include "orelab/coloring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace orelab {

int Coloring::colors_used() const {
  int mask = 0;
  for (int c : color)
    if (c >= 0)
      mask |= 1 << c;
  return std::popcount(static_cast<unsigned>(mask));
}

bool is_proper(const Graph &g, const Coloring &c) {
  if (static_cast<int>(c.color.size()) != g.order())
    return false;
  for (const Edge &e : g.edges())
    if (c[e.u] >= 0 && c[e.u] == c[e.v])
      return false;
  return true;
}

bool is_proper_on(const Graph &g, VertexSet r, const Coloring &c, int k) {
  if (static_cast<int>(c.color.size()) != g.order())
    return false;
  for (int v : r) {
    if (c[v] < 0 || c[v] >= k)
      return false;
    for (int u : g.neighbors(v) & r)
      if (c[u] == c[v])
        return false;
  }
  return true;
}

namespace {

class Dsatur {
public:
  Dsatur(const Graph &g, int k) : g_(g), k_(k), colour_(g.order(), -1) {}

  bool colour_component(VertexSet comp) { return extend(comp, -1); }
  const std::vector<int> &colours() const { return colour_; }

private:
  int forbidden(int v) const {
    int mask = 0;
    for (int c = 0; c < k_; ++c)
      if (g_.neighbors(v).intersects(classes_[c]))
        mask |= 1 << c;
    return mask;
  }

  bool extend(VertexSet open, int max_used) {
    if (open.empty())
      return true;
    int pick = -1, pick_sat = -1, pick_deg = -1, pick_forbidden = 0;
    for (int v : open) {
      const int f = forbidden(v);
      const int sat = std::popcount(static_cast<unsigned>(f));
      if (sat == k_)
        return false;
      const int deg = (g_.neighbors(v) & open).size();
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_forbidden = f;
      }
    }
    open.erase(pick);
    // Colours above max_used + 1 are interchangeable with max_used + 1.
    const int limit = std::min(k_, max_used + 2);
    for (int c = 0; c < limit; ++c) {
      if (pick_forbidden & (1 << c))
        continue;
      classes_[c].insert(pick);
      colour_[pick] = c;
      if (extend(open, std::max(max_used, c)))
        return true;
      classes_[c].erase(pick);
      colour_[pick] = -1;
    }
    return false;
  }

  const Graph &g_;
  int k_;
  std::array<VertexSet, 4> classes_{};
  std::vector<int> colour_;
};

void check_k(int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("colour count must be in 1..4");
}

} // namespace

std::optional<Coloring> is_k_colorable(const Graph &g, int k) {
  check_k(k);
  Dsatur solver(g, k);
  for (VertexSet comp : components(g))
    if (!solver.colour_component(comp))
      return std::nullopt;
  Coloring out{solver.colours()};
  if (!is_proper(g, out))
    throw std::logic_error("colouring solver returned an improper colouring");
  return out;
}

std::optional<Coloring> random_k_coloring(const Graph &g, int k,
                                          std::mt19937_64 &rng) {
  check_k(k);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::array<int, 4> palette{0, 1, 2, 3};
  std::shuffle(palette.begin(), palette.begin() + k, rng);
  auto shuffled = is_k_colorable(g.relabeled(perm), k);
  if (!shuffled)
    return std::nullopt;
  Coloring out{std::vector<int>(g.order(), -1)};
  for (int v = 0; v < g.order(); ++v)
    out.color[v] = palette[shuffled->color[perm[v]]];
  return out;
}

void for_each_k_coloring(const Graph &g, int k,
                         const std::function<bool(const Coloring &)> &visit) {
  check_k(k);
  Coloring c{std::vector<int>(g.order(), -1)};
  bool stop = false;
  std::function<void(int)> rec = [&](int v) {
    if (stop)
      return;
    if (v == g.order()) {
      if (!visit(c))
        stop = true;
      return;
    }
    for (int col = 0; col < k && !stop; ++col) {
      bool clash = false;
      for (int u : g.neighbors(v))
        if (u < v && c[u] == col) {
          clash = true;
          break;
        }
      if (clash)
        continue;
      c.color[v] = col;
      rec(v + 1);
    }
    c.color[v] = -1;
  };
  rec(0);
}

bool is_5_critical(const Graph &g) {
  if (g.order() == 0 || g.min_degree() == 0)
    return false;
  if (is_k_colorable(g, 4))
    return false;
  for (const Edge &e : g.edges())
    if (!is_k_colorable(g.without_edge(e.u, e.v), 4))
      return false;
  return true;
}

Subgraph extract_5_critical(const Graph &g) {
  if (is_k_colorable(g, 4))
    throw std::invalid_argument("graph is 4-colourable; no 5-critical subgraph");
  Graph h = g;
  auto edges = g.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    Graph trial = h.without_edge(it->u, it->v);
    if (!is_k_colorable(trial, 4))
      h = std::move(trial);
  }
  VertexSet keep;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) > 0)
      keep.insert(v);
  return induced_subgraph(h, keep);
}

namespace {

void require_proper_subset(const Graph &g, VertexSet r) {
  if (!r.subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  if (r == g.vertices())
    throw std::invalid_argument("vertex set must be a proper subset");
}

} // namespace

std::vector<Edge> identifiable_pairs(const Graph &g, VertexSet r) {
  require_proper_subset(g, r);
  std::vector<Edge> out;
  if (r.empty())
    return out;
  const Subgraph sub = induced_subgraph(g, r);
  const int n = sub.graph.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!sub.graph.adjacent(a, b) &&
          !is_k_colorable(sub.graph.with_edge(a, b), 4))
        out.push_back({sub.origin[a], sub.origin[b]});
  return out;
}

CollapseReport is_collapsible(const Graph &g, VertexSet r) {
  require_proper_subset(g, r);
  if (r.size() < 5)
    throw std::invalid_argument("collapsible sets need at least 5 vertices");
  CollapseReport rep;
  rep.boundary = boundary(g, r);
  if (rep.boundary.empty())
    throw std::domain_error("empty boundary (disconnected input)");
  const Subgraph sub = induced_subgraph(g, r);
  if (!is_k_colorable(sub.graph, 4))
    throw std::invalid_argument("G[R] is not 4-colourable");

  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < sub.graph.order(); ++i)
    index[sub.origin[i]] = i;
  auto lift = [&](const Coloring &c) {
    Coloring out{std::vector<int>(g.order(), -1)};
    for (int i = 0; i < sub.graph.order(); ++i)
      out.color[sub.origin[i]] = c[i];
    return out;
  };

  const std::vector<int> bd = rep.boundary.to_vector();
  for (std::size_t i = 0; i < bd.size(); ++i) {
    for (std::size_t j = i + 1; j < bd.size(); ++j) {
      const int a = index[bd[i]], b = index[bd[j]];
      if (sub.graph.adjacent(a, b)) {
        // Any colouring splits an adjacent pair.
        rep.witness = lift(*is_k_colorable(sub.graph, 4));
        return rep;
      }
      if (auto c = is_k_colorable(sub.graph.with_edge(a, b), 4)) {
        rep.witness = lift(*c);
        return rep;
      }
      ++rep.pairs_checked;
    }
  }
  rep.collapsible = true;
  rep.tight = bd.size() >= 2;
  for (std::size_t i = 0; i < bd.size() && rep.tight; ++i)
    for (std::size_t j = i + 1; j < bd.size() && rep.tight; ++j)
      rep.tight = is_5_critical(sub.graph.with_edge(index[bd[i]], index[bd[j]]));
  return rep;
}

CriticalComplement critical_complement(const Graph &g, VertexSet r) {
  const CollapseReport rep = is_collapsible(g, r);
  if (!rep.collapsible)
    throw std::invalid_argument("vertex set is not collapsible");
  const VertexSet outside = g.vertices() - r;
  CriticalComplement out;
  out.origin = outside.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.origin.size()); ++i)
    index[out.origin[i]] = i;
  out.special = static_cast<int>(out.origin.size());
  out.origin.push_back(-1);
  for (int v : rep.boundary)
    index[v] = out.special;
  GraphBuilder b(out.special + 1);
  for (const Edge &e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      b.add_edge(index[e.u], index[e.v]);
  out.graph = b.build();
  return out;
}

} // namespace orelab
