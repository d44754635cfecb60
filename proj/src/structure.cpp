#include "orelab/structure.hpp"

#include <algorithm>
#include <functional>

namespace orelab {

namespace {

VertexSet degree_four(const Graph &g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 4)
      out.insert(v);
  return out;
}

} // namespace

D4Components d4_components(const Graph &g) {
  D4Components out;
  out.components = components(g, degree_four(g));
  for (VertexSet c : out.components) {
    if (c.size() == 1)
      ++out.singles;
    else if (c.size() == 2)
      ++out.pairs;
  }
  return out;
}

std::vector<Cluster> clusters(const Graph &g) {
  std::vector<Cluster> out;
  VertexSet left = degree_four(g);
  while (!left.empty()) {
    const int v = left.first();
    const VertexSet closed = g.neighbors(v) | VertexSet::single(v);
    Cluster c{VertexSet::single(v), closed};
    for (int u : left - VertexSet::single(v))
      if ((g.neighbors(u) | VertexSet::single(u)) == closed)
        c.vertices.insert(u);
    left -= c.vertices;
    out.push_back(c);
  }
  return out;
}

std::vector<int> cluster_profile(const Graph &g) {
  std::vector<int> sizes;
  for (const Cluster &c : clusters(g))
    sizes.push_back(c.vertices.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

SizeOrder compare_smaller(const Graph &g, const Graph &h) {
  if (h.order() != g.order())
    return h.order() < g.order() ? SizeOrder::HSmaller : SizeOrder::GSmaller;
  if (h.size() != g.size())
    return h.size() > g.size() ? SizeOrder::HSmaller : SizeOrder::GSmaller;
  std::vector<int> pg = cluster_profile(g);
  std::vector<int> ph = cluster_profile(h);
  const std::size_t len = std::max(pg.size(), ph.size());
  pg.resize(len, 0);
  ph.resize(len, 0);
  if (ph == pg)
    return SizeOrder::EqualRank;
  return ph < pg ? SizeOrder::HSmaller : SizeOrder::GSmaller;
}

bool is_k_connected(const Graph &g, int k) {
  if (g.order() <= k)
    return false;
  // Small k only; enumerates all deletion sets of size < k.
  std::function<bool(VertexSet, int, int)> ok = [&](VertexSet removed,
                                                    int start, int left) {
    if (components(g, g.vertices() - removed).size() != 1)
      return false;
    if (left == 0)
      return true;
    for (int v = start; v < g.order(); ++v) {
      VertexSet next = removed;
      next.insert(v);
      if (!ok(next, v + 1, left - 1))
        return false;
    }
    return true;
  };
  return ok(VertexSet{}, 0, k - 1);
}

} // namespace orelab
