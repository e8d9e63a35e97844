#pragma once

#include <cstdint>
#include <random>

#include "orchard/network.hpp"

namespace orchard {

// Uniform draws from [0, bound) via rejection sampling on raw mt19937_64
// output. The engine is pinned by the standard; std::uniform_int_distribution
// is not, so this keeps seeded runs byte-reproducible across standard library
// implementations. Exposed for tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t bounded(std::uint64_t bound);  // bound >= 1

 private:
  std::mt19937_64 engine_;
};

// A random orchard network with the requested leaf and reticulation counts,
// built by reversing picking: starting from a single leaf, interleave
// "add cherry" moves (subdivide the pendant arc of a random leaf, or pair the
// first two leaves under a fresh root, and attach a new leaf) and "add
// reticulated cherry" moves (subdivide the pendant arcs of an ordered pair of
// distinct leaves whose parents are not joined by an arc, and add an arc
// between the two new vertices). Leaves are labeled t1..tN in creation order.
//
// Every result is an orchard network by construction: the moves are the
// inverses of cherry reduction and reticulated-cherry cutting.
//
// Requires n_leaves >= 1; n_retics == 0 when n_leaves == 1; and
// n_retics <= 1 when n_leaves == 2 (with only two leaves, one reticulated-
// cherry move exhausts the pendant pairs whose parents are unjoined).
// Same seed, same network, on any conforming platform.
PhyloNetwork random_orchard(std::size_t n_leaves, std::size_t n_retics, std::uint64_t seed);

}  // namespace orchard
