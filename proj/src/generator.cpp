#include "orchard/generator.hpp"

#include <algorithm>
#include <limits>

namespace orchard {

std::uint64_t Rng::bounded(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded draw from empty range");
  // Reject the tail that would bias the modulus.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

struct PendantPair {
  VertexId u, v;  // leaves, ordered
};

// Ordered pairs of distinct leaves whose parents are not joined by an arc in
// either direction, in ascending (u, v) order.
std::vector<PendantPair> valid_retic_pairs(const TrackedDigraph& g,
                                           const std::vector<VertexId>& leaves) {
  std::vector<PendantPair> out;
  for (VertexId u : leaves) {
    for (VertexId v : leaves) {
      if (u == v) continue;
      VertexId pu = g.at(u).parents[0];
      VertexId pv = g.at(v).parents[0];
      if (pu != pv && (g.has_arc(pu, pv) || g.has_arc(pv, pu))) continue;
      out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace

PhyloNetwork random_orchard(std::size_t n_leaves, std::size_t n_retics, std::uint64_t seed) {
  if (n_leaves < 1) throw std::invalid_argument("need at least one leaf");
  if (n_leaves == 1 && n_retics > 0)
    throw std::invalid_argument("a single-leaf network admits no reticulations");
  if (n_leaves == 2 && n_retics > 1)
    throw std::invalid_argument("a two-leaf orchard network admits at most one reticulation");

  Rng rng(seed);
  TrackedDigraph g;
  std::vector<VertexId> leaves{g.add_leaf("t1")};
  std::size_t cherries_left = n_leaves - 1;
  std::size_t retics_left = n_retics;

  while (cherries_left + retics_left > 0) {
    bool retic_possible = retics_left > 0 && leaves.size() >= 2;
    std::vector<PendantPair> pairs;
    if (retic_possible) {
      pairs = valid_retic_pairs(g, leaves);
      retic_possible = !pairs.empty();
    }
    bool do_retic;
    if (!retic_possible) {
      if (cherries_left == 0)
        throw std::invalid_argument("no reticulated-cherry move available");
      do_retic = false;
    } else if (cherries_left == 0) {
      do_retic = true;
    } else {
      do_retic = rng.bounded(cherries_left + retics_left) >= cherries_left;
    }

    if (do_retic) {
      PendantPair pick = pairs[rng.bounded(pairs.size())];
      VertexId w1 = g.subdivide_arc(g.at(pick.u).parents[0], pick.u);
      VertexId w2 = g.subdivide_arc(g.at(pick.v).parents[0], pick.v);
      g.add_arc(w1, w2);
      --retics_left;
    } else {
      std::string label = "t" + std::to_string(n_leaves - cherries_left + 1);
      VertexId target = leaves[rng.bounded(leaves.size())];
      VertexId fresh;
      if (g.at(target).parents.empty()) {
        // Single-leaf network: give it a root instead of subdividing.
        VertexId root = g.add_vertex();
        g.add_arc(root, target);
        fresh = g.add_leaf(label);
        g.add_arc(root, fresh);
      } else {
        VertexId w = g.subdivide_arc(g.at(target).parents[0], target);
        fresh = g.add_leaf(label);
        g.add_arc(w, fresh);
      }
      leaves.push_back(fresh);
      --cherries_left;
    }
  }

  return PhyloNetwork(std::move(g));
}

}  // namespace orchard
