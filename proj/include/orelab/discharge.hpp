#ifndef ORELAB_DISCHARGE_HPP
#define ORELAB_DISCHARGE_HPP

#include <string>
#include <vector>

#include "orelab/fixed.hpp"
#include "orelab/graph.hpp"
#include "orelab/report.hpp"

namespace orelab {

struct Transfer {
  int from = -1; ///< degree-4 vertex in a D4 component of size >= 2
  int to = -1;   ///< neighbour of degree >= 5
};

/// Charges start at (9 + eps) - 2d(v). Every transfer moves 1/4, so final
/// charges live over 84.
struct ChargeLedger {
  std::vector<int> degree;
  std::vector<Rat21> initial;
  std::vector<Rat84> final_charge;
  std::vector<Transfer> transfers;

  Rat21 initial_total() const;
  Rat84 final_total() const;
  /// "<v> d=<deg> init=<num>/21 final=<num>/84" per vertex, then
  /// "transfer <from> -> <to> 1/4" per transfer.
  std::string dump() const;
};

ChargeLedger run_discharge(const Graph &g);

/// Rows edge_mic (2|E| >= 3|V| + mic), mic_d4 (mic >= 4(S+M)),
/// d4_sparse (8(S+M) < (3 + eps)|V|, only when p(G) > 0) and
/// charge_conservation, plus observational rows for the receiver bounds
/// and the counting chain that only a minimum counterexample satisfies.
Report closing_inequalities(const Graph &g);

} // namespace orelab

#endif // ORELAB_DISCHARGE_HPP
