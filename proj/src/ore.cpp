#include "orelab/ore.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "orelab/structure.hpp"

namespace orelab {

// ---------------------------------------------------------------- recipes

OreRecipe OreRecipe::compose(OreRecipe edge_side, Edge replaced_edge,
                             OreRecipe vertex_side, int split_vertex,
                             VertexSet to_first, VertexSet to_second) {
  if (to_first.empty() || to_second.empty())
    throw std::invalid_argument("split parts must both be non-empty");
  if (to_first.intersects(to_second))
    throw std::invalid_argument("split parts overlap");
  OreRecipe r;
  r.node_ = std::make_shared<const Node>(Node{std::move(edge_side), replaced_edge,
                                              std::move(vertex_side), split_vertex,
                                              to_first, to_second});
  return r;
}

int OreRecipe::leaves() const {
  return is_leaf() ? 1 : edge_side().leaves() + vertex_side().leaves();
}

namespace {

std::string join(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty())
      out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

class RecipeParser {
public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  OreRecipe parse_all() {
    skip_ws();
    OreRecipe r = recipe();
    skip_ws();
    if (pos_ != text_.size())
      fail("trailing characters");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("recipe parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  void expect(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit)
      fail("expected \"" + std::string(lit) + "\"");
    pos_ += lit.size();
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
      ++pos_;
    if (start == pos_ || pos_ - start > 2)
      fail("expected a vertex index");
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v >= kMaxVertices)
      fail("vertex index out of range");
    return v;
  }

  VertexSet list() {
    VertexSet s;
    s.insert(number());
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      s.insert(number());
    }
    return s;
  }

  OreRecipe recipe() {
    if (text_.substr(pos_, 4) == "(k5)") {
      pos_ += 4;
      return OreRecipe{};
    }
    expect("(compose");
    skip_ws();
    OreRecipe edge_side = recipe();
    skip_ws();
    expect("e=");
    Edge e;
    e.u = number();
    expect("-");
    e.v = number();
    skip_ws();
    OreRecipe vertex_side = recipe();
    skip_ws();
    expect("z=");
    int z = number();
    skip_ws();
    expect("split=");
    VertexSet first = list();
    expect("|");
    VertexSet second = list();
    skip_ws();
    expect(")");
    try {
      return OreRecipe::compose(std::move(edge_side), e, std::move(vertex_side), z,
                                first, second);
    } catch (const std::invalid_argument &ex) {
      fail(ex.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string OreRecipe::to_string() const {
  if (is_leaf())
    return "(k5)";
  const Edge e = replaced_edge();
  return "(compose " + edge_side().to_string() + " e=" + std::to_string(e.u) +
         "-" + std::to_string(e.v) + " " + vertex_side().to_string() +
         " z=" + std::to_string(split_vertex()) + " split=" + join(to_first()) +
         "|" + join(to_second()) + ")";
}

OreRecipe OreRecipe::parse(std::string_view text) {
  return RecipeParser(text).parse_all();
}

bool OreRecipe::operator==(const OreRecipe &other) const {
  if (is_leaf() || other.is_leaf())
    return is_leaf() == other.is_leaf();
  return replaced_edge() == other.replaced_edge() &&
         split_vertex() == other.split_vertex() &&
         to_first() == other.to_first() && to_second() == other.to_second() &&
         edge_side() == other.edge_side() && vertex_side() == other.vertex_side();
}

// ------------------------------------------------------------ composition

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return b.build();
}

Graph ore_composition(const Graph &edge_side, Edge xy, const Graph &vertex_side,
                      int z, VertexSet to_x, VertexSet to_y) {
  const int n1 = edge_side.order();
  const int n2 = vertex_side.order();
  if (xy.u < 0 || xy.v < 0 || xy.u >= n1 || xy.v >= n1 ||
      !edge_side.adjacent(xy.u, xy.v))
    throw std::invalid_argument("replaced edge absent from the edge side");
  if (z < 0 || z >= n2)
    throw std::invalid_argument("split vertex out of range");
  if (to_x.empty() || to_y.empty())
    throw std::invalid_argument("split with an empty side");
  if (to_x.intersects(to_y) || (to_x | to_y) != vertex_side.neighbors(z))
    throw std::invalid_argument("split does not partition the split vertex's "
                                "neighbourhood");
  if (n1 + n2 - 1 > kMaxVertices)
    throw std::invalid_argument("composition exceeds 64 vertices");

  std::vector<int> image(n2, -1);
  int next = n1;
  for (int v = 0; v < n2; ++v)
    if (v != z)
      image[v] = next++;
  GraphBuilder b(next);
  for (const Edge &e : edge_side.edges())
    if (!(e == Edge{std::min(xy.u, xy.v), std::max(xy.u, xy.v)}))
      b.add_edge(e.u, e.v);
  for (const Edge &e : vertex_side.edges())
    if (e.u != z && e.v != z)
      b.add_edge(image[e.u], image[e.v]);
  for (int v : to_x)
    b.add_edge(xy.u, image[v]);
  for (int v : to_y)
    b.add_edge(xy.v, image[v]);
  return b.build();
}

MaterializedOre ore_compose(const OreRecipe &recipe) {
  if (recipe.is_leaf())
    return {complete_graph(5), std::vector<int>(5, 0)};
  const MaterializedOre left = ore_compose(recipe.edge_side());
  const MaterializedOre right = ore_compose(recipe.vertex_side());
  const CanonicalForm cl = canonical_form(left.graph);
  const CanonicalForm cr = canonical_form(right.graph);
  MaterializedOre out;
  out.graph = ore_composition(cl.graph, recipe.replaced_edge(), cr.graph,
                              recipe.split_vertex(), recipe.to_first(),
                              recipe.to_second());
  const int n1 = cl.graph.order();
  const int offset = recipe.edge_side().leaves();
  out.leaf.assign(out.graph.order(), -1);
  for (int v = 0; v < n1; ++v)
    out.leaf[cl.perm[v]] = left.leaf[v];
  std::vector<int> right_leaf(cr.graph.order());
  for (int v = 0; v < cr.graph.order(); ++v)
    right_leaf[cr.perm[v]] = right.leaf[v];
  int next = n1;
  for (int v = 0; v < cr.graph.order(); ++v)
    if (v != recipe.split_vertex())
      out.leaf[next++] = offset + right_leaf[v];
  return out;
}

// ------------------------------------------------------------ enumeration

std::vector<OreClass> enumerate_5_ore(
    int max_n, const std::function<void(const OreClass &)> &on_class,
    const std::function<void(const CompositionEvent &)> &on_composition) {
  std::vector<OreClass> all;
  if (max_n < 5)
    return all;
  std::map<int, std::vector<std::size_t>> by_order;
  std::unordered_map<CanonKey, std::size_t> index;

  {
    CanonicalForm k5 = canonical_form(complete_graph(5));
    all.push_back({k5.graph, k5.key, OreRecipe{}});
    index.emplace(k5.key, 0);
    by_order[5].push_back(0);
    if (on_class)
      on_class(all.back());
  }

  // Stable storage: events hold references into `all`, so reserve up front
  // per level and only append after a level's pairs are fixed.
  for (int n = 9; n <= max_n; n += 4) {
    std::vector<std::size_t> level;
    for (int n1 = 5; n1 <= n - 4; n1 += 4) {
      const int n2 = n + 1 - n1;
      for (std::size_t i1 : by_order[n1]) {
        for (std::size_t i2 : by_order[n2]) {
          const Graph g1 = all[i1].graph;
          const Graph g2 = all[i2].graph;
          for (const Edge &e : g1.edges()) {
            for (int z = 0; z < g2.order(); ++z) {
              const VertexSet nz = g2.neighbors(z);
              const std::vector<int> nbrs = nz.to_vector();
              const int d = static_cast<int>(nbrs.size());
              for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d);
                   ++mask) {
                VertexSet first;
                for (int b = 0; b < d; ++b)
                  if (mask >> b & 1U)
                    first.insert(nbrs[b]);
                const VertexSet second = nz - first;
                Graph g = ore_composition(g1, e, g2, z, first, second);
                CanonicalForm cf = canonical_form(g);
                auto [it, inserted] = index.try_emplace(cf.key, all.size());
                if (inserted) {
                  all.push_back({std::move(cf.graph), cf.key,
                                 OreRecipe::compose(all[i1].recipe, e,
                                                    all[i2].recipe, z, first,
                                                    second)});
                  level.push_back(all.size() - 1);
                  if (on_class)
                    on_class(all.back());
                }
                if (on_composition)
                  on_composition({all[i1], all[i2], all[it->second], inserted});
              }
            }
          }
        }
      }
    }
    by_order[n] = std::move(level);
  }
  return all;
}

// ------------------------------------------------------------ recognition

namespace {

class OreMemo {
public:
  std::optional<std::optional<OreRecipe>> find(const CanonKey &k) {
    std::lock_guard lock(mu_);
    auto it = memo_.find(k);
    if (it == memo_.end())
      return std::nullopt;
    return it->second;
  }
  void store(const CanonKey &k, const std::optional<OreRecipe> &r) {
    std::lock_guard lock(mu_);
    memo_[k] = r;
  }

private:
  std::mutex mu_;
  std::unordered_map<CanonKey, std::optional<OreRecipe>> memo_;
};

OreMemo &ore_memo() {
  static OreMemo memo;
  return memo;
}

bool plausible_ore(const Graph &g) {
  const int n = g.order();
  return n >= 5 && n % 4 == 1 && 4 * g.size() == 9 * n - 5 &&
         g.min_degree() >= 4;
}

std::optional<OreRecipe> recognise(const CanonicalForm &cf);

std::optional<OreRecipe> recognise_graph(const Graph &g) {
  if (!plausible_ore(g))
    return std::nullopt;
  return recognise(canonical_form(g));
}

std::optional<OreRecipe> try_split(const Graph &g, int x, int y, VertexSet a,
                                   VertexSet b) {
  const VertexSet bx = g.neighbors(x) & b;
  const VertexSet by = g.neighbors(y) & b;
  if (bx.empty() || by.empty() || bx.intersects(by))
    return std::nullopt;

  VertexSet side1 = a | VertexSet{x, y};
  Subgraph s1 = induced_subgraph(g, side1);
  const int x1 = static_cast<int>(std::find(s1.origin.begin(), s1.origin.end(), x) -
                                  s1.origin.begin());
  const int y1 = static_cast<int>(std::find(s1.origin.begin(), s1.origin.end(), y) -
                                  s1.origin.begin());
  const Graph g1 = s1.graph.with_edge(x1, y1);
  if (!plausible_ore(g1))
    return std::nullopt;

  Subgraph s2 = induced_subgraph(g, b | VertexSet{x, y});
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < s2.graph.order(); ++i)
    local[s2.origin[i]] = i;
  Identification id =
      identify_vertices(s2.graph, VertexSet{local[x], local[y]});
  if (!plausible_ore(id.graph))
    return std::nullopt;

  const CanonicalForm c1 = canonical_form(g1);
  auto r1 = recognise(c1);
  if (!r1)
    return std::nullopt;
  const CanonicalForm c2 = canonical_form(id.graph);
  auto r2 = recognise(c2);
  if (!r2)
    return std::nullopt;

  VertexSet first, second;
  for (int v : bx)
    first.insert(c2.perm[id.image[local[v]]]);
  for (int v : by)
    second.insert(c2.perm[id.image[local[v]]]);
  return OreRecipe::compose(*r1, Edge{c1.perm[x1], c1.perm[y1]}, *r2,
                            c2.perm[id.merged], first, second);
}

std::optional<OreRecipe> recognise(const CanonicalForm &cf) {
  if (auto hit = ore_memo().find(cf.key))
    return *hit;
  const Graph &g = cf.graph;
  std::optional<OreRecipe> found;
  if (g.order() == 5 && g.size() == 10) {
    found = OreRecipe{};
  } else if (plausible_ore(g)) {
    const int n = g.order();
    for (int x = 0; x < n && !found; ++x) {
      for (int y = x + 1; y < n && !found; ++y) {
        if (g.adjacent(x, y))
          continue;
        const VertexSet rest = g.vertices() - VertexSet{x, y};
        const auto comps = components(g, rest);
        const int c = static_cast<int>(comps.size());
        if (c < 2)
          continue;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << c) && !found;
             ++mask) {
          VertexSet a;
          for (int i = 0; i < c; ++i)
            if (mask >> i & 1U)
              a |= comps[i];
          found = try_split(g, x, y, a, rest - a);
        }
      }
    }
    if (found && canonical_key(ore_compose(*found).graph) != cf.key)
      throw std::logic_error("5-Ore recogniser produced a wrong recipe");
  }
  ore_memo().store(cf.key, found);
  return found;
}

} // namespace

std::optional<OreRecipe> is_5_ore(const Graph &g) { return recognise_graph(g); }

// ------------------------------------------------------------------- gems

bool GemReport::has_gem_avoiding(VertexSet s) const {
  for (VertexSet d : diamonds)
    if (!d.intersects(s))
      return true;
  for (VertexSet e : emeralds)
    if (!e.intersects(s))
      return true;
  return false;
}

GemReport gems(const Graph &g) {
  GemReport out;
  VertexSet four;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 4)
      four.insert(v);
  // Triangles of degree-4 vertices; each extends to emeralds and diamonds.
  for (int a : four) {
    const VertexSet na = g.neighbors(a) & four;
    for (int b : na - VertexSet::range(a + 1)) {
      for (int c : (na & g.neighbors(b)) - VertexSet::range(b + 1)) {
        const VertexSet tri{a, b, c};
        const VertexSet common = g.neighbors(a) & g.neighbors(b) & g.neighbors(c);
        for (int d : common & four)
          if (d > c)
            out.emeralds.push_back(tri | VertexSet::single(d));
        for (int p : common)
          for (int q : common - VertexSet::range(p + 1))
            if (!g.adjacent(p, q))
              out.diamonds.push_back(tri | VertexSet{p, q});
      }
    }
  }
  std::sort(out.diamonds.begin(), out.diamonds.end());
  out.diamonds.erase(std::unique(out.diamonds.begin(), out.diamonds.end()),
                     out.diamonds.end());
  std::sort(out.emeralds.begin(), out.emeralds.end());
  return out;
}

// --------------------------------------------------- Ore-collapsible sets

std::vector<VertexSet> ore_collapsible_subsets(const Graph &g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v))
        continue;
      const VertexSet pair{u, v};
      const VertexSet rest = g.vertices() - pair;
      const auto comps = components(g, rest);
      const int c = static_cast<int>(comps.size());
      if (c < 2)
        continue;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << c); ++mask) {
        VertexSet r = pair;
        for (int i = 0; i < c; ++i)
          if (mask >> i & 1U)
            r |= comps[i];
        if (boundary(g, r) != pair)
          continue;
        Subgraph sub = induced_subgraph(g, r);
        const int a = static_cast<int>(
            std::find(sub.origin.begin(), sub.origin.end(), u) - sub.origin.begin());
        const int b = static_cast<int>(
            std::find(sub.origin.begin(), sub.origin.end(), v) - sub.origin.begin());
        if (is_5_ore(sub.graph.with_edge(a, b)))
          out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----------------------------------------------------- almost 5-Ore graphs

AlmostOre almost_5_ore_from(const Graph &g5ore, int v) {
  if (v < 0 || v >= g5ore.order())
    throw std::invalid_argument("vertex out of range");
  for (const Cluster &c : clusters(g5ore)) {
    if (!c.vertices.contains(v))
      continue;
    if (c.vertices.size() < 2)
      break;
    Subgraph sub = delete_vertex(g5ore, v);
    AlmostOre out{std::move(sub.graph), {}, std::move(sub.origin)};
    for (int i = 0; i < static_cast<int>(out.origin.size()); ++i)
      if (c.vertices.contains(out.origin[i]))
        out.special.insert(i);
    return out;
  }
  throw std::invalid_argument("vertex is not in a cluster of size at least two");
}

// ----------------------------------------------------------------- frames

std::optional<Frame> find_frame(const Graph &h, int w) {
  if (w < 0 || w >= h.order() || h.degree(w) != 3)
    return std::nullopt;
  Frame frame;
  frame.special = w;
  frame.corners[0] = w;
  {
    int i = 1;
    for (int c : h.neighbors(w))
      frame.corners[i++] = c;
  }
  const VertexSet corners = h.neighbors(w) | VertexSet::single(w);
  const VertexSet others = h.neighbors(w);

  std::vector<Edge> barred;
  for (VertexSet comp : components(h, h.vertices() - corners)) {
    VertexSet attach;
    for (int v : comp)
      attach |= h.neighbors(v) & corners;
    if (attach.size() != 2 || !attach.subset_of(others))
      return std::nullopt;
    const int a = attach.first();
    const int b = (attach - VertexSet::single(a)).first();
    if (h.adjacent(a, b))
      return std::nullopt;
    const Edge e{a, b};
    if (std::find(barred.begin(), barred.end(), e) != barred.end())
      return std::nullopt;
    barred.push_back(e);
    const VertexSet na = h.neighbors(a) & comp;
    const VertexSet nb = h.neighbors(b) & comp;
    if (na.intersects(nb))
      return std::nullopt;

    Subgraph sub = induced_subgraph(h, comp | VertexSet{a, b});
    std::vector<int> local(h.order(), -1);
    for (int i = 0; i < sub.graph.order(); ++i)
      local[sub.origin[i]] = i;
    Identification id = identify_vertices(sub.graph, VertexSet{local[a], local[b]});
    if (!is_5_ore(id.graph))
      return std::nullopt;

    FrameBar bar;
    bar.corners = e;
    bar.bar = id.graph;
    bar.split_vertex = id.merged;
    bar.origin.assign(id.graph.order(), -1);
    for (int v : comp)
      bar.origin[id.image[local[v]]] = v;
    for (int v : na)
      bar.to_first.insert(id.image[local[v]]);
    frame.bars.push_back(std::move(bar));
  }
  // Frame edges without a bar must be edges of H.
  for (int a : others)
    for (int b : others)
      if (a < b && !h.adjacent(a, b) &&
          std::find(barred.begin(), barred.end(), Edge{a, b}) == barred.end())
        return std::nullopt;

  if (reconstruct_from_frame(frame, h.order()) != h)
    return std::nullopt;
  return frame;
}

Graph reconstruct_from_frame(const Frame &frame, int order) {
  GraphBuilder b(order);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Edge e{std::min(frame.corners[i], frame.corners[j]),
             std::max(frame.corners[i], frame.corners[j])};
      bool is_barred = std::any_of(frame.bars.begin(), frame.bars.end(),
                                   [&](const FrameBar &bar) { return bar.corners == e; });
      if (!is_barred)
        b.add_edge(e.u, e.v);
    }
  for (const FrameBar &bar : frame.bars) {
    for (const Edge &e : bar.bar.edges()) {
      int u = e.u, v = e.v;
      if (v == bar.split_vertex)
        std::swap(u, v);
      if (u == bar.split_vertex) {
        const int corner = bar.to_first.contains(v) ? bar.corners.u : bar.corners.v;
        b.add_edge(corner, bar.origin[v]);
      } else {
        b.add_edge(bar.origin[u], bar.origin[v]);
      }
    }
  }
  return b.build();
}

} // namespace orelab
