#include "orchard/cherries.hpp"

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "orchard/enewick.hpp"
#include "orchard/isomorphism.hpp"

using namespace orchard;
using namespace testing;

using Pair = std::pair<std::string, std::string>;

TEST_CASE("cherry and reticulated-cherry inventory of the fixtures") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  CHECK(find_cherries(six) == std::vector<Pair>{{"x1", "x2"}});
  CHECK(find_reticulated_cherries(six) == std::vector<Pair>{{"x3", "x4"}, {"x6", "x5"}});

  PhyloNetwork ladder = load_fixture("ladder_three_leaf.enwk");
  CHECK(find_cherries(ladder).empty());
  CHECK(find_reticulated_cherries(ladder) == std::vector<Pair>{{"x1", "x2"}});

  // The twins are irreducible outright.
  PhyloNetwork twin = load_fixture("level4_twin_a.enwk");
  CHECK(find_cherries(twin).empty());
  CHECK(find_reticulated_cherries(twin).empty());
}

TEST_CASE("pair predicates") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  CHECK(is_cherry(six, "x1", "x2"));
  CHECK(is_cherry(six, "x2", "x1"));  // unordered
  CHECK_FALSE(is_cherry(six, "x3", "x4"));
  CHECK(is_reticulated_cherry(six, "x3", "x4"));
  CHECK_FALSE(is_reticulated_cherry(six, "x4", "x3"));  // ordered
  CHECK(is_reticulated_cherry(six, "x6", "x5"));
  CHECK_FALSE(is_reticulated_cherry(six, "x1", "x2"));
}

TEST_CASE("reducing a cherry deletes the leaf and suppresses the shared parent") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  VertexId x1 = six.leaf("x1");
  VertexId p = six.parent_of_leaf("x1");
  VertexId gp = six.parents(p)[0];

  PhyloNetwork r = reduce_leaf(six, "x1", "x2");
  CHECK(r.vertex_count() == six.vertex_count() - 2);
  CHECK(r.leaf_labels() == std::vector<std::string>{"x1", "x3", "x4", "x5", "x6"});
  CHECK_FALSE(r.has_leaf("x2"));
  CHECK(r.has_arc(gp, x1));  // the bypass arc left by the suppression
  CHECK(r.reticulation_count() == six.reticulation_count());
}

TEST_CASE("reducing the cherry under the root yields the single-vertex network") {
  PhyloNetwork two = parse_enewick("(a,b);");
  PhyloNetwork r = reduce_leaf(two, "a", "b");
  CHECK(r.is_single_vertex());
  CHECK(r.leaf_labels() == std::vector<std::string>{"a"});
  CHECK(r.root() == two.leaf("a"));
}

TEST_CASE("cutting a reticulated cherry removes the connecting arc and one reticulation") {
  PhyloNetwork ladder = load_fixture("ladder_three_leaf.enwk");
  PhyloNetwork cut = cut_reticulated_cherry(ladder, "x1", "x2");
  CHECK(cut.vertex_count() == ladder.vertex_count() - 2);
  CHECK(cut.reticulation_count() == ladder.reticulation_count() - 1);
  CHECK(cut.leaf_labels() == ladder.leaf_labels());
  // The ladder exposes the same ordered pair again after each cut.
  CHECK(is_reticulated_cherry(cut, "x1", "x2"));
}

TEST_CASE("greedy picking reduces the fixtures that are orchard") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  auto seq = orchard_sequence(six);
  REQUIRE(seq.has_value());
  CHECK(is_orchard(six));

  PhyloNetwork ladder = load_fixture("ladder_three_leaf.enwk");
  auto lseq = orchard_sequence(ladder);
  REQUIRE(lseq.has_value());
  // Four cuts of (x1,x2), then two cherry reductions.
  REQUIRE(lseq->size() == 6);
  for (int i = 0; i < 4; ++i) {
    CHECK(lseq->at(i).kind == PairKind::ReticulatedCherry);
    CHECK(lseq->at(i).a == "x1");
    CHECK(lseq->at(i).b == "x2");
  }
  CHECK(lseq->at(4).kind == PairKind::Cherry);
  CHECK(lseq->at(5).kind == PairKind::Cherry);

  // Replaying the sequence lands on the single vertex.
  PhyloNetwork cur = ladder;
  for (const auto& step : *lseq) cur = apply_step(cur, step);
  CHECK(cur.is_single_vertex());
}

TEST_CASE("the twin fixtures are not orchard") {
  CHECK_FALSE(is_orchard(load_fixture("level4_twin_a.enwk")));
  CHECK_FALSE(is_orchard(load_fixture("level4_twin_b.enwk")));
  CHECK_FALSE(orchard_sequence(load_fixture("level4_twin_a.enwk")).has_value());
}

TEST_CASE("picking order does not matter") {
  // On an orchard network every maximal sequence of reductions reaches the
  // single vertex; on a non-orchard network none does.
  auto pool = network_pool(24, 600);
  Rng rng(41);
  for (const auto& net : pool)
    for (int trial = 0; trial < 3; ++trial) CHECK(random_picking_succeeds(net, rng));

  PhyloNetwork twin = load_fixture("level4_twin_a.enwk");
  for (int trial = 0; trial < 3; ++trial) CHECK_FALSE(random_picking_succeeds(twin, rng));
}

TEST_CASE("picking preserves recoverability") {
  auto pool = network_pool(24, 87);
  Rng rng(5);
  for (const auto& net : pool) {
    PhyloNetwork cur = net;
    while (!cur.is_single_vertex()) {
      REQUIRE(is_recoverable(cur));
      std::vector<PickingStep> all;
      for (const auto& [a, b] : find_cherries(cur)) {
        all.push_back({PairKind::Cherry, a, b});
        all.push_back({PairKind::Cherry, b, a});
      }
      for (const auto& [a, b] : find_reticulated_cherries(cur))
        all.push_back({PairKind::ReticulatedCherry, a, b});
      REQUIRE(!all.empty());
      cur = apply_step(cur, all[rng.bounded(all.size())]);
    }
  }
}

TEST_CASE("orchard networks are recoverable") {
  auto pool = network_pool(30, 93);
  for (const auto& net : pool) {
    REQUIRE(is_orchard(net));
    CHECK(is_recoverable(net));
  }
}

TEST_CASE("cut and reduce leave ids of untouched vertices in place") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  PhyloNetwork cut = cut_reticulated_cherry(six, "x3", "x4");
  for (VertexId v : cut.vertex_ids()) CHECK(six.contains(v));
  CHECK(cut.leaf("x5") == six.leaf("x5"));
  CHECK(cut.root() == six.root());

  // Cutting (x3,x4) removes the arc between their parents and suppresses
  // both, so x3 and x4 hang from the former grandparents.
  CHECK(cut.reticulation_count() == 2);
  CHECK(cut.vertex_count() == 15);
  CHECK(is_orchard(cut));
}
