#include "doctest.h"
#include "orelab/constructions.hpp"
#include "orelab/discharge.hpp"
#include "orelab/ore.hpp"

using namespace orelab;

TEST_CASE("K5 keeps its charges") {
  const ChargeLedger led = run_discharge(complete_graph(5));
  CHECK(led.transfers.empty());
  CHECK(led.initial_total() == Rat21{110});
  CHECK(led.final_total() == Rat84{440});
  for (const Rat84 &c : led.final_charge)
    CHECK(c == Rat84{88});
}

TEST_CASE("C5 join K2 sends ten quarters to the apexes") {
  const Graph g = join(cycle_graph(5), complete_graph(2));
  const ChargeLedger led = run_discharge(g);
  CHECK(led.transfers.size() == 10);
  for (const Transfer &t : led.transfers) {
    CHECK(t.from < 5);
    CHECK(t.to >= 5);
  }
  // Apex: degree 6, initial 9 + eps - 12, plus five quarters.
  CHECK(led.final_charge[5] == (Rat21::integer(-3) + kEpsilon).widen<84>() + Rat84{105});
  // Cycle vertex: 1 + eps minus two quarters.
  CHECK(led.final_charge[0] == (Rat21::integer(1) + kEpsilon).widen<84>() - Rat84{42});
  CHECK(led.final_total() == led.initial_total().widen<84>());
  CHECK(led.initial_total() == Rat21::integer(9 * 7 - 4 * 16) + kEpsilon * 7);
}

TEST_CASE("a degree-4 pair with three big neighbours ends at a quarter plus eps") {
  // Two adjacent degree-4 vertices 0 and 1 sharing neighbours 2, 3, 4 of
  // degree at least 5 (a K5 plus extra vertices attached to 2, 3, 4).
  GraphBuilder b(7);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      b.add_edge(u, v);
  for (int v : {2, 3, 4}) {
    b.add_edge(v, 5);
    b.add_edge(v, 6);
  }
  b.add_edge(5, 6);
  const Graph g = b.build();
  REQUIRE(g.degree(0) == 4);
  REQUIRE(g.degree(2) == 6);
  const ChargeLedger led = run_discharge(g);
  CHECK(led.final_charge[0] == Rat84{21} + kEpsilon.widen<84>());
}

TEST_CASE("ledger dump format") {
  const ChargeLedger led = run_discharge(join(cycle_graph(5), complete_graph(2)));
  const std::string dump = led.dump();
  CHECK(dump.find("0 d=4 init=22/21 final=46/84\n") == 0);
  CHECK(dump.find("transfer 0 -> 5 1/4\n") != std::string::npos);
}

TEST_CASE("closing inequalities") {
  const Report k5 = closing_inequalities(complete_graph(5));
  CHECK(k5.all_pass());
  const CheckRow *edge = k5.find("edge_mic");
  REQUIRE(edge);
  // 2*10 - 3*5 - 4 = 1.
  CHECK(edge->slack_num == 21);
  CHECK(k5.find("d4_sparse"));

  const Graph dk = ore_composition(complete_graph(5), Edge{0, 1}, complete_graph(5), 0,
                                   VertexSet{1}, VertexSet{2, 3, 4});
  CHECK(closing_inequalities(dk).all_pass());

  const Report my = closing_inequalities(mycielskian(groetzsch_graph()));
  CHECK(my.all_pass());
  CHECK_FALSE(my.find("d4_sparse"));
  bool vacuous = false, labelled = false;
  for (const InfoRow &row : my.infos()) {
    vacuous = vacuous || (row.name == "d4_sparse" && row.text.starts_with("vacuous"));
    labelled = labelled ||
               row.text.find("counterexample-only bound, not asserted") != std::string::npos;
  }
  CHECK(vacuous);
  CHECK(labelled);
}
