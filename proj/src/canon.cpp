#include "orelab/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "orelab/graph_io.hpp"

namespace orelab {

std::string CanonKey::short_id() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "g";
  for (int shift = 60; shift >= 0; shift -= 4)
    out.push_back(kHex[(h >> shift) & 15]);
  return out;
}

namespace {

class Canonizer {
public:
  explicit Canonizer(const Graph &g) : g_(g), n_(g.order()) {
    twins_.assign(n_, VertexSet{});
    for (int u = 0; u < n_; ++u)
      for (int w = u + 1; w < n_; ++w) {
        VertexSet pair{u, w};
        if ((g.neighbors(u) - pair) == (g.neighbors(w) - pair)) {
          twins_[u].insert(w);
          twins_[w].insert(u);
        }
      }
  }

  CanonicalForm run() {
    std::vector<int> colour(n_, 0);
    search(colour);
    CanonicalForm out;
    out.perm = best_perm_;
    out.graph = g_.relabeled(best_perm_);
    out.key.bytes = to_graph6(out.graph);
    return out;
  }

private:
  // Refines colour to the coarsest equitable partition finer than it.
  // Colours are renumbered 0..k-1 in an isomorphism-invariant order.
  int refine(std::vector<int> &colour) const {
    int cells = 0;
    {
      std::vector<int> sorted = colour;
      std::sort(sorted.begin(), sorted.end());
      cells = static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                               sorted.begin());
      for (int &c : colour)
        c = static_cast<int>(std::lower_bound(sorted.begin(),
                                              sorted.begin() + cells, c) -
                             sorted.begin());
    }
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(cells + 1, 0);
        sig[v][0] = colour[v];
        for (int u : g_.neighbors(v))
          ++sig[v][1 + colour[u]];
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]])
          ++next;
        colour[order[i]] = next;
      }
      const int now = n_ == 0 ? 0 : next + 1;
      if (now == cells)
        return cells;
      cells = now;
    }
  }

  void search(std::vector<int> colour) {
    const int cells = refine(colour);
    if (cells == n_) {
      consider_leaf(colour);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colour)
      ++size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target]))
        target = c;

    VertexSet tried;
    for (int v = 0; v < n_; ++v) {
      if (colour[v] != target || twins_[v].intersects(tried))
        continue;
      tried.insert(v);
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u)
        child[u] = 2 * colour[u] + (colour[u] == target && u != v ? 1 : 0);
      search(std::move(child));
    }
  }

  void consider_leaf(const std::vector<int> &perm) {
    std::vector<std::uint64_t> rows(n_, 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (int u : g_.neighbors(v))
        row |= std::uint64_t{1} << (63 - perm[u]);
      rows[perm[v]] = row;
    }
    if (best_perm_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = perm;
    }
  }

  const Graph &g_;
  int n_;
  std::vector<VertexSet> twins_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_perm_;
};

} // namespace

CanonicalForm canonical_form(const Graph &g) {
  if (g.order() == 0)
    return {g, {}, {to_graph6(g)}};
  return Canonizer(g).run();
}

CanonKey canonical_key(const Graph &g) { return canonical_form(g).key; }

} // namespace orelab
