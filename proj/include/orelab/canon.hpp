#ifndef ORELAB_CANON_HPP
#define ORELAB_CANON_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "orelab/graph.hpp"

namespace orelab {

/// Isomorphism-class identifier: the graph6 encoding of the canonical
/// relabelling. Equal keys <=> isomorphic graphs.
struct CanonKey {
  std::string bytes;

  /// Short printable handle, "g" followed by 16 hex digits of a 64-bit
  /// FNV-1a hash of bytes. Used for file names and on the command line.
  std::string short_id() const;

  auto operator<=>(const CanonKey &) const = default;
};

struct CanonicalForm {
  Graph graph;
  /// perm[v] is the canonical index of input vertex v.
  std::vector<int> perm;
  CanonKey key;
};

/// Canonical relabelling by equitable-partition refinement and
/// individualisation, keeping the lexicographically largest adjacency matrix
/// over all leaves. Twin vertices are individualised only once per cell.
CanonicalForm canonical_form(const Graph &g);
CanonKey canonical_key(const Graph &g);

inline bool isomorphic(const Graph &a, const Graph &b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_key(a) == canonical_key(b);
}

} // namespace orelab

template <> struct std::hash<orelab::CanonKey> {
  std::size_t operator()(const orelab::CanonKey &k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

#endif // ORELAB_CANON_HPP
