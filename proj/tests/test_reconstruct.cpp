#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "orchard/enewick.hpp"
#include "orchard/exhibit.hpp"
#include "orchard/isomorphism.hpp"
#include "orchard/reconstruct.hpp"

using namespace orchard;
using testing::load_fixture;
using testing::network_pool;
using testing::with_reticulated_cherry;

namespace {

template <typename F>
ReconstructCode code_of(F&& f) {
  try {
    f();
  } catch (const ReconstructError& e) {
    return e.code;
  }
  FAIL("expected a ReconstructError");
  throw std::logic_error("unreachable");
}

PhyloNetwork rebuild(const PhyloNetwork& net) {
  return construct_orchard(net.leaf_labels(), trinet_set(net));
}

}  // namespace

TEST_CASE("find_reducible_pair prefers the cherry of the six-leaf network") {
  PhyloNetwork net = load_fixture("orchard_six_leaf.enwk");
  ReduciblePair pair = find_reducible_pair(net.leaf_labels(), trinet_set(net));
  CHECK(pair.kind == PairKind::Cherry);
  CHECK(pair.a == "x1");
  CHECK(pair.b == "x2");
}

TEST_CASE("find_reducible_pair requires at least four leaves") {
  CHECK_THROWS_AS(find_reducible_pair({"a", "b", "c"}, TrinetSet{}), std::invalid_argument);
}

TEST_CASE("a pair is reducible in the network iff reducible in every trinet containing it") {
  for (const PhyloNetwork& net : network_pool(18, 8400)) {
    const auto& labels = net.leaf_labels();
    TrinetSet ts = trinet_set(net);
    for (const auto& a : labels) {
      for (const auto& b : labels) {
        if (a == b) continue;
        bool cherry_all = true;
        bool ret_all = true;
        for (const auto& [triple, t] : ts) {
          bool has_a = std::find(triple.begin(), triple.end(), a) != triple.end();
          bool has_b = std::find(triple.begin(), triple.end(), b) != triple.end();
          if (!has_a || !has_b) continue;
          cherry_all = cherry_all && is_cherry(t, a, b);
          ret_all = ret_all && is_reticulated_cherry(t, a, b);
        }
        CHECK(is_cherry(net, a, b) == cherry_all);
        CHECK(is_reticulated_cherry(net, a, b) == ret_all);
      }
    }
  }
}

TEST_CASE("transforming for a cherry yields the trinets of the reduced network") {
  std::size_t exercised = 0;
  for (const PhyloNetwork& net : network_pool(30, 5150)) {
    if (net.leaf_count() < 4) continue;
    auto cherries = find_cherries(net);
    if (cherries.empty()) continue;
    const auto& [a, b] = cherries.front();
    TrinetSet got = transform_trinets_cherry(trinet_set(net), a, b);
    TrinetSet expected = trinet_set(reduce_leaf(net, a, b));
    CHECK(trinet_sets_equal(got, expected));
    ++exercised;
  }
  CHECK(exercised >= 8);
}

TEST_CASE("transforming for a cut yields the trinets of the cut network") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    PhyloNetwork net = with_reticulated_cherry(5 + seed % 3, 2 + seed % 3, 9000 + seed);
    auto [a, b] = find_reticulated_cherries(net).front();
    TrinetSet got = transform_trinets_ret(trinet_set(net), a, b);
    TrinetSet expected = trinet_set(cut_reticulated_cherry(net, a, b));
    CHECK(trinet_sets_equal(got, expected));
  }
}

TEST_CASE("resolved arc reproduces the cut network's trinet on the six-leaf fixture") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  REQUIRE(is_reticulated_cherry(six, "x3", "x4"));
  TrinetSet got = transform_trinets_ret(trinet_set(six), "x3", "x4");
  TrinetSet expected = trinet_set(cut_reticulated_cherry(six, "x3", "x4"));
  REQUIRE(trinet_sets_equal(got, expected));
  auto key = make_triple("x4", "x5", "x6");
  CHECK(is_isomorphic(got.at(key), expected.at(key)));
}

TEST_CASE("resolve_cut_arc sees both deletions and non-deletions across a sweep") {
  int no_deletion = 0;
  int deletion = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    PhyloNetwork net = with_reticulated_cherry(6, 3, 7700 + i);
    auto [a, b] = find_reticulated_cherries(net).front();
    TrinetSet ts = trinet_set(net);
    for (const auto& [triple, t] : ts) {
      bool has_a = std::find(triple.begin(), triple.end(), a) != triple.end();
      bool has_b = std::find(triple.begin(), triple.end(), b) != triple.end();
      if (has_a || !has_b) continue;
      std::vector<std::string> xy;
      for (const auto& l : triple)
        if (l != b) xy.push_back(l);
      CutArcChoice choice = resolve_cut_arc(t, ts.at(make_triple(a, b, xy[0])),
                                            ts.at(make_triple(a, b, xy[1])), a, b);
      if (choice == CutArcChoice::NoDeletion)
        ++no_deletion;
      else
        ++deletion;
    }
  }
  CHECK(no_deletion > 0);
  CHECK(deletion > 0);
}

TEST_CASE("reconstruction round-trips the fixture networks") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  CHECK(is_isomorphic(rebuild(six), six));
  PhyloNetwork ladder = load_fixture("ladder_three_leaf.enwk");
  CHECK(is_isomorphic(rebuild(ladder), ladder));
}

TEST_CASE("reconstruction round-trips generated networks, trees included") {
  for (const PhyloNetwork& net : network_pool(20, 31415))
    CHECK(is_isomorphic(rebuild(net), net));
}

// Both networks drive the lowest stable ancestor of a pair below a trinet's
// root mid-reconstruction; the marked-parent comparison and the post-cut
// rebuild must root the intermediate networks below the stranded apex.
TEST_CASE("reconstruction handles pair networks that root below the trinet root") {
  PhyloNetwork skew = parse_enewick("(((a,(b)#H1),(#H1,z)),w);");
  REQUIRE(is_orchard(skew));
  TrinetSet ts = trinet_set(skew);
  CutArcChoice choice =
      resolve_cut_arc(ts.at(make_triple("b", "w", "z")), ts.at(make_triple("a", "b", "w")),
                      ts.at(make_triple("a", "b", "z")), "a", "b");
  CHECK(choice != CutArcChoice::NoDeletion);
  CHECK(is_isomorphic(rebuild(skew), skew));

  PhyloNetwork crown = parse_enewick("((a,(b)#H1),(#H1,(x,y)));");
  REQUIRE(is_orchard(crown));
  TrinetSet got = transform_trinets_ret(trinet_set(crown), "a", "b");
  TrinetSet expected = trinet_set(cut_reticulated_cherry(crown, "a", "b"));
  CHECK(trinet_sets_equal(got, expected));
  CHECK(is_isomorphic(rebuild(crown), crown));
}

TEST_CASE("reconstruction is deterministic and canonical") {
  PhyloNetwork net = random_orchard(6, 3, 4242);
  CHECK(canonical_key(rebuild(net)) == canonical_key(rebuild(net)));
  CHECK(write_enewick(rebuild(net)) == write_enewick(net));
}

TEST_CASE("reconstruction traces one line per level") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  std::vector<std::string> lines;
  PhyloNetwork rebuilt = construct_orchard(six.leaf_labels(), trinet_set(six),
                                           [&](const std::string& line) { lines.push_back(line); });
  CHECK(is_isomorphic(rebuilt, six));
  REQUIRE(!lines.empty());
  for (std::size_t i = 0; i < lines.size(); ++i)
    CHECK(lines[i].rfind("level " + std::to_string(i) + ":", 0) == 0);
  CHECK(lines.front().find("6 leaves") != std::string::npos);
  CHECK(lines.back().find("3 leaves remain") != std::string::npos);
}

TEST_CASE("reconstruction rejects inputs that are not a complete trinet set") {
  PhyloNetwork six = load_fixture("orchard_six_leaf.enwk");
  TrinetSet ts = trinet_set(six);
  std::vector<std::string> labels = six.leaf_labels();

  SUBCASE("fewer than three leaves") {
    CHECK(code_of([&] { construct_orchard({"x1", "x2"}, TrinetSet{}); }) ==
          ReconstructCode::BadInput);
  }
  SUBCASE("duplicate labels") {
    CHECK(code_of([&] { construct_orchard({"x1", "x1", "x2"}, ts); }) ==
          ReconstructCode::BadInput);
  }
  SUBCASE("missing triple") {
    TrinetSet broken = ts;
    broken.erase(broken.begin());
    CHECK(code_of([&] { construct_orchard(labels, broken); }) == ReconstructCode::BadInput);
  }
  SUBCASE("entry whose network is on different leaves") {
    TrinetSet broken = ts;
    broken.insert_or_assign(make_triple("x1", "x2", "x3"), parse_enewick("(x4,(x5,x6));"));
    CHECK(code_of([&] { construct_orchard(labels, broken); }) == ReconstructCode::BadInput);
  }
  SUBCASE("label outside the leaf set") {
    TrinetSet broken;
    for (const auto& [triple, t] : ts)
      broken.emplace(triple, t);
    broken.erase(make_triple("x1", "x2", "x3"));
    broken.emplace(make_triple("x1", "x2", "zz"), parse_enewick("(x1,(x2,zz));"));
    CHECK(code_of([&] { construct_orchard(labels, broken); }) == ReconstructCode::BadInput);
  }
  SUBCASE("non-recoverable trinet") {
    PhyloNetwork hidden = parse_enewick("((((a,(b,c)))#H2,(#H2)#H1),#H1);");
    CHECK_FALSE(is_recoverable(hidden));
    TrinetSet one;
    one.emplace(make_triple("a", "b", "c"), hidden);
    CHECK(code_of([&] { construct_orchard({"a", "b", "c"}, one); }) ==
          ReconstructCode::BadInput);
  }
}

TEST_CASE("the twin networks' shared trinet set admits no reducible pair") {
  for (const char* name : {"level4_twin_a.enwk", "level4_twin_b.enwk"}) {
    PhyloNetwork twin = load_fixture(name);
    CHECK(code_of([&] { construct_orchard(twin.leaf_labels(), trinet_set(twin)); }) ==
          ReconstructCode::NoReduciblePair);
  }
}
