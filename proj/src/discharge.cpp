#include "orelab/discharge.hpp"

#include "orelab/canon.hpp"
#include "orelab/packing.hpp"
#include "orelab/potential.hpp"
#include "orelab/structure.hpp"

namespace orelab {

namespace {

constexpr Rat84 kQuarter{21};

} // namespace

Rat21 ChargeLedger::initial_total() const {
  Rat21 s;
  for (Rat21 c : initial)
    s += c;
  return s;
}

Rat84 ChargeLedger::final_total() const {
  Rat84 s;
  for (Rat84 c : final_charge)
    s += c;
  return s;
}

std::string ChargeLedger::dump() const {
  std::string out;
  for (std::size_t v = 0; v < degree.size(); ++v)
    out += std::to_string(v) + " d=" + std::to_string(degree[v]) +
           " init=" + initial[v].to_string() +
           " final=" + final_charge[v].to_string() + "\n";
  for (const Transfer &t : transfers)
    out += "transfer " + std::to_string(t.from) + " -> " + std::to_string(t.to) +
           " 1/4\n";
  return out;
}

ChargeLedger run_discharge(const Graph &g) {
  ChargeLedger led;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    led.degree.push_back(g.degree(v));
    led.initial.push_back(Rat21::integer(9 - 2 * g.degree(v)) + kEpsilon);
    led.final_charge.push_back(led.initial.back().widen<84>());
  }
  for (VertexSet comp : d4_components(g).components) {
    if (comp.size() < 2)
      continue;
    for (int u : comp)
      for (int v : g.neighbors(u))
        if (g.degree(v) >= 5) {
          led.transfers.push_back({u, v});
          led.final_charge[u] -= kQuarter;
          led.final_charge[v] += kQuarter;
        }
  }
  return led;
}

Report closing_inequalities(const Graph &g) {
  Report rep;
  const std::string key = canonical_key(g).short_id();
  const int n = g.order();
  const int m = g.size();
  const int mc = mic(g).value;
  const D4Components d4 = d4_components(g);
  const int sm = d4.singles + d4.pairs;

  rep.at_least("edge_mic", key, Rat21::integer(2 * m), Rat21::integer(3 * n + mc));
  rep.at_least("mic_d4", key, Rat21::integer(mc), Rat21::integer(4 * sm));
  const Rat21 p = potential(g);
  if (p > Rat21{})
    rep.greater("d4_sparse", key, Rat21::integer(3 * n) + kEpsilon * n,
                Rat21::integer(8 * sm));
  else
    rep.info("d4_sparse", key, "vacuous p=" + p.to_string());

  const ChargeLedger led = run_discharge(g);
  rep.equal("charge_conservation", key, led.final_total(),
            led.initial_total().widen<84>());

  // Receiver bounds below rely on structure only a minimum counterexample has.
  const Rat84 receiver_bound = Rat84{-63} + kEpsilon.widen<84>();
  int over = 0;
  for (int v = 0; v < n; ++v)
    if (led.degree[v] >= 5 && led.final_charge[v] > receiver_bound)
      ++over;
  rep.info("receiver_bound", key,
           "vertices_above=" + std::to_string(over) +
               " counterexample-only bound, not asserted");
  // 7(S+M) > (3 - 4 eps) |V|, scaled by 21.
  const bool chain = 7 * 21 * sm > (63 - 4) * n;
  rep.info("counting_chain", key,
           std::string(chain ? "holds" : "fails") +
               " counterexample-only bound, not asserted");
  return rep;
}

} // namespace orelab
