#pragma once

#include <map>
#include <optional>
#include <string>

#include "orchard/network.hpp"

namespace orchard {

// Canonical form of a directed (multi)graph with optional distinct vertex
// labels: a total order on the vertices such that the induced adjacency
// encoding is lexicographically minimal over the search tree of a color
// refinement with individualization. Two graphs have equal keys iff they are
// isomorphic by a label-preserving digraph isomorphism. Worst-case
// exponential on highly symmetric inputs; fine at the problem sizes this
// library targets.
struct CanonicalForm {
  std::vector<VertexId> order;  // order[i] = vertex at canonical position i
  std::string key;
};

CanonicalForm canonical_form(const TrackedDigraph& g);

std::string canonical_key(const TrackedDigraph& g);
std::string canonical_key(const PhyloNetwork& net);

// A label-preserving isomorphism a -> b, or nullopt. Works on arbitrary
// digraphs, not just valid networks; parallel arcs count by multiplicity.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const TrackedDigraph& a,
                                                             const TrackedDigraph& b);
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const PhyloNetwork& a,
                                                             const PhyloNetwork& b);

bool is_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b);

}  // namespace orchard
