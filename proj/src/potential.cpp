#include "orelab/potential.hpp"

#include <algorithm>
#include <stdexcept>

#include "orelab/canon.hpp"
#include "orelab/ore.hpp"
#include "orelab/packing.hpp"
#include "orelab/structure.hpp"

namespace orelab {

int p_ky(const Graph &g) { return 9 * g.order() - 4 * g.size(); }

int p_ky(const Graph &g, VertexSet r) { return 9 * r.size() - 4 * g.edges_within(r); }

Rat21 potential(const Graph &g, int t) {
  return {190 * std::int64_t{g.order()} - 84 * std::int64_t{g.size()} - 8 * std::int64_t{t}};
}

Rat21 potential(const Graph &g) { return potential(g, t_number(g).value); }

Rat21 potential(const Graph &g, VertexSet r) {
  if (r.empty())
    return {};
  return potential(induced_subgraph(g, r).graph);
}

Rat21 f_core(int x) {
  if (x < 1 || x > 4)
    throw std::invalid_argument("core size must be in 1..4");
  return Rat21::integer(9 * x - 2 * x * (x - 1)) + kEpsilon * x;
}

bool PhiIdentification::has_empty_class() const {
  return std::any_of(empty_class.begin(), empty_class.end(), [](bool b) { return b; });
}

PhiIdentification phi_identify(const Graph &g, VertexSet r, const Coloring &phi) {
  if (!r.subset_of(g.vertices()) || r == g.vertices())
    throw std::invalid_argument("R must be a proper subset of V(G)");
  if (r.size() < 5)
    throw std::invalid_argument("R must have at least 5 vertices");
  if (!is_proper_on(g, r, phi, 4))
    throw std::invalid_argument("phi is not a proper 4-colouring of G[R]");

  PhiIdentification out;
  out.image.assign(g.order(), -1);
  for (int v : g.vertices() - r) {
    out.image[v] = static_cast<int>(out.origin.size());
    out.origin.push_back(v);
  }
  const int k = static_cast<int>(out.origin.size());
  out.empty_class.fill(true);
  for (int c = 0; c < 4; ++c) {
    out.core[c] = k + c;
    out.origin.push_back(-1);
  }
  for (int v : r) {
    out.image[v] = k + phi[v];
    out.empty_class[phi[v]] = false;
  }
  GraphBuilder b(k + 4);
  for (const Edge &e : g.edges()) {
    const int a = out.image[e.u], c = out.image[e.v];
    if (a != c)
      b.add_edge(a, c);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      b.add_edge(k + i, k + j);
  out.graph = b.build();
  return out;
}

ExtensionRecord critical_extension(const Graph &g, VertexSet r, const Coloring &phi) {
  ExtensionRecord rec;
  rec.host = g;
  rec.r = r;
  rec.phi = phi;
  rec.identified = phi_identify(g, r, phi);
  if (is_k_colorable(rec.identified.graph, 4))
    throw std::logic_error("phi-identification is 4-colourable; host is not "
                           "5-critical");
  rec.extender = extract_5_critical(rec.identified.graph);
  const Graph &w = rec.extender.graph;
  const auto &id_origin = rec.identified.origin;

  std::vector<int> host_of(w.order(), -1);
  VertexSet outside_w; // host ids of W - X
  for (int i = 0; i < w.order(); ++i) {
    host_of[i] = id_origin[rec.extender.origin[i]];
    if (host_of[i] < 0)
      rec.core.insert(i);
    else
      outside_w.insert(host_of[i]);
  }
  if (rec.core.empty())
    throw std::logic_error("extension with empty core; host is not 5-critical");
  rec.r_prime = outside_w | r;
  rec.spanning = rec.r_prime == g.vertices();

  bool complete = is_clique(w, rec.core);
  for (int i = 0; i < w.order() && complete; ++i) {
    if (host_of[i] < 0)
      continue;
    const int in_r = (g.neighbors(host_of[i]) & r).size();
    const int in_core = (w.neighbors(i) & rec.core).size();
    if (in_r > in_core)
      complete = false;
  }
  if (complete) {
    const VertexSet w_part = w.vertices() - rec.core;
    complete = g.edges_within(outside_w) == w.edges_within(w_part);
  }
  rec.complete = complete;
  return rec;
}

Coloring random_subset_coloring(const Graph &g, VertexSet r, std::mt19937_64 &rng) {
  const Subgraph sub = induced_subgraph(g, r);
  auto c = random_k_coloring(sub.graph, 4, rng);
  if (!c)
    throw std::invalid_argument("G[R] is not 4-colourable");
  Coloring out{std::vector<int>(g.order(), -1)};
  for (int i = 0; i < sub.graph.order(); ++i)
    out.color[sub.origin[i]] = (*c)[i];
  return out;
}

Report verify_extension_inequalities(const ExtensionRecord &rec) {
  static constexpr int kKyDrop[5] = {0, 9, 14, 15, 12};
  const Graph &g = rec.host;
  const Graph &w = rec.extender.graph;
  const std::string key = canonical_key(g).short_id();
  const int x = rec.core_size();

  Report rep;
  const Rat21 ky_rhs = Rat21::integer(p_ky(g, rec.r) + p_ky(w) - kKyDrop[x]);
  rep.at_least("ky_extension", key, ky_rhs, Rat21::integer(p_ky(g, rec.r_prime)));

  const Rat21 p_r = potential(g, rec.r);
  const Rat21 p_rp = potential(g, rec.r_prime);
  const int t_w = t_number(w).value;
  const Rat21 p_w = potential(w, t_w);
  const int t_rest = t_number(induced_subgraph(w, w.vertices() - rec.core).graph).value;
  const Rat21 core_rhs = p_r + p_w - f_core(x) + kDelta * (t_w - t_rest);
  rep.at_least("extension_core", key, core_rhs, p_rp);
  const Rat21 uniform_rhs = p_r + p_w - Rat21::integer(9) - kEpsilon + kDelta;
  rep.at_least("extension_uniform", key, uniform_rhs, p_rp);
  return rep;
}

Report verify_collapsible_potential(const Graph &g, VertexSet r) {
  const CriticalComplement cc = critical_complement(g, r);
  Report rep;
  const Rat21 rhs = potential(g) - potential(cc.graph) + Rat21::integer(9) +
                    kEpsilon - kDelta;
  rep.at_least("collapsible_potential", canonical_key(g).short_id(), potential(g, r),
               rhs);
  return rep;
}

MainTheoremResult verify_main_theorem(const Graph &g) {
  if (!is_5_critical(g))
    throw std::invalid_argument("graph is not 5-critical");
  MainTheoremResult out;
  const std::string key = canonical_key(g).short_id();
  const int n = g.order();
  out.t = t_number(g).value;
  out.p = potential(g, out.t);
  if (g.order() == 5) {
    out.which = MainCase::K5;
    out.report.equal("k5_potential", key, out.p, Rat21{94});
  } else if (is_5_ore(g)) {
    out.which = MainCase::Ore;
    out.report.at_least("ore_potential", key, Rat21{91 - n}, out.p);
  } else {
    out.which = MainCase::Other;
    out.report.at_least("non_ore_potential", key, Rat21::integer(5) - kP, out.p);
  }
  if (out.t == 0)
    out.report.at_least("triangle_free_edges", key, Rat21::integer(4 * g.size()),
                        Rat21::integer(9 * n - 5) + kEpsilon * n);
  return out;
}

Report verify_ore5_bounds(const Graph &g, std::size_t budget) {
  Report rep;
  const std::string key = canonical_key(g).short_id();
  const int pk = p_ky(g);
  const bool ore = is_5_ore(g).has_value();
  rep.at_least("ky_upper", key, Rat21::integer(5), Rat21::integer(pk));
  rep.holds("ky_ore_equivalence", key, (pk >= 3) == ore);
  if (!ore)
    return rep;

  const int n = g.order();
  std::size_t examined = 0, low = 0;
  bool ok = true, exhausted = false;
  for (int k = 5; k < n && !exhausted; ++k) {
    // Gosper's hack over k-subsets of n bits.
    for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < (std::uint64_t{1} << n);) {
      if (examined == budget) {
        exhausted = true;
        break;
      }
      ++examined;
      const VertexSet r(m);
      const int pr = p_ky(g, r);
      if (pr < 12) {
        ++low;
        const bool good = pr == 9 && is_collapsible(g, r).collapsible;
        if (!good) {
          ok = false;
          rep.info("ore_low_subset_violation", key,
                   "subset_bits=" + std::to_string(m) + " p_ky=" + std::to_string(pr));
        }
      }
      const std::uint64_t c = m & -m;
      const std::uint64_t rr = m + c;
      m = (((rr ^ m) >> 2) / c) | rr;
    }
  }
  rep.holds("ore_low_subset", key, ok);
  rep.info("ore_low_subset_sweep", key,
           "examined=" + std::to_string(examined) + " low=" + std::to_string(low) +
               (exhausted ? " budget_exhausted" : " complete"));
  return rep;
}

Report verify_composition_packing(const std::string &key, int t, int t_edge_side,
                                  int t_vertex_side, bool edge_side_k5,
                                  bool vertex_side_k5) {
  Report rep;
  rep.at_least("composition_packing", key, Rat21::integer(t),
               Rat21::integer(t_edge_side + t_vertex_side - 2));
  if (vertex_side_k5)
    rep.at_least("composition_k5_side", key, Rat21::integer(t),
                 Rat21::integer(t_edge_side + 1));
  if (edge_side_k5)
    rep.at_least("composition_k5_side", key, Rat21::integer(t),
                 Rat21::integer(t_vertex_side + 1));
  return rep;
}

Report verify_ore_packing_and_gems(const Graph &g) {
  Report rep;
  const std::string key = canonical_key(g).short_id();
  const int n = g.order();
  if (n > 5)
    rep.at_least("ore_packing", key, Rat21::integer(4 * t_number(g).value),
                 Rat21::integer(n + 7));
  const GemReport gr = gems(g);
  bool every_vertex = true;
  for (int v = 0; v < n && every_vertex; ++v)
    every_vertex = gr.has_gem_avoiding(VertexSet::single(v));
  rep.holds("gem_avoids_vertex", key, every_vertex);
  if (n > 5) {
    bool every_k4 = true;
    for (VertexSet piece : clique_pieces(g))
      if (piece.size() == 4 && !gr.has_gem_avoiding(piece))
        every_k4 = false;
    rep.holds("gem_avoids_k4", key, every_k4);
  }
  return rep;
}

namespace {

bool has_identifiable_pair_in_proper_subset(const Graph &g) {
  // Adding an edge to a larger R only helps, so R = V - w suffices.
  for (int w = 0; w < g.order(); ++w) {
    const VertexSet r = g.vertices() - VertexSet::single(w);
    if (!identifiable_pairs(g, r).empty())
      return true;
  }
  return false;
}

bool has_k5_minus_edge(const Graph &g) {
  const int n = g.order();
  bool found = false;
  auto rec = [&](auto &&self, int start, VertexSet s) -> void {
    if (found)
      return;
    if (s.size() == 5) {
      found = g.edges_within(s) >= 9;
      return;
    }
    for (int v = start; v < n && !found; ++v) {
      VertexSet t = s;
      t.insert(v);
      // Each vertex of K5 - e has at least 3 neighbours among the others.
      if (g.degree(v) >= 3)
        self(self, v + 1, t);
    }
  };
  rec(rec, 0, VertexSet{});
  return found;
}

} // namespace

Report structure_lemma_audit(const Graph &g) {
  Report rep;
  const std::string key = canonical_key(g).short_id();
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };

  rep.info("identifiable_pair_in_proper_subset", key,
           yes_no(has_identifiable_pair_in_proper_subset(g)));

  const std::vector<int> profile = cluster_profile(g);
  rep.info("max_cluster_size", key,
           std::to_string(profile.empty() ? 0 : profile.front()));

  const D4Components d4 = d4_components(g);
  int max_d4 = 0;
  for (VertexSet c : d4.components)
    max_d4 = std::max(max_d4, c.size());
  rep.info("max_d4_component", key,
           std::to_string(max_d4) + " S=" + std::to_string(d4.singles) +
               " M=" + std::to_string(d4.pairs));

  rep.info("contains_k5_minus_edge", key, yes_no(has_k5_minus_edge(g)));

  const GemReport gr = gems(g);
  rep.info("gems", key,
           "diamonds=" + std::to_string(gr.diamonds.size()) +
               " emeralds=" + std::to_string(gr.emeralds.size()) +
               " ungemmed=" + yes_no(gr.ungemmed()));

  VertexSet matched;
  for (VertexSet c : d4.components)
    if (c.size() >= 2)
      matched |= c;
  int worst = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 5)
      worst = std::max(worst, (g.neighbors(v) & matched).size());
  rep.info("max_matched_d4_neighbours_of_degree5", key, std::to_string(worst));

  rep.info("three_connected", key, yes_no(is_k_connected(g, 3)));
  return rep;
}

} // namespace orelab
