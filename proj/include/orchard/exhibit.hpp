#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orchard/network.hpp"

namespace orchard {

// The subgraph of net induced by all directed paths from the lowest stable
// ancestor of `labels` to a leaf in `labels`: vertex v is kept iff lsa -> v
// and v -> (some leaf in labels) are both reachable, and an arc (u,w) is kept
// iff lsa -> u and w -> (some leaf in labels) are. Vertex ids are preserved
// and provenance is initialized to singletons.
TrackedDigraph path_graph(const PhyloNetwork& net, const std::vector<std::string>& labels);

// The network exhibited on `labels`: the fully simplified path graph.
// Surviving vertices keep their source ids, and each carries the set of
// source vertices absorbed into it during simplification (PhyloNetwork::
// absorbed / holder_of), so callers can ask what became of a source vertex.
// Meaningful when net is recoverable; this is not re-checked here.
PhyloNetwork exhibit(const PhyloNetwork& net, const std::vector<std::string>& labels);

// Sorted 3-subset of leaf labels.
using LeafTriple = std::array<std::string, 3>;

LeafTriple make_triple(std::string a, std::string b, std::string c);

// All trinets exhibited by net, keyed by leaf triple.
using TrinetSet = std::map<LeafTriple, PhyloNetwork>;

// Requires a recoverable network with at least 3 leaves.
TrinetSet trinet_set(const PhyloNetwork& net);

// Same triples, and isomorphic trinets triple-by-triple.
bool trinet_sets_equal(const TrinetSet& s, const TrinetSet& t);

}  // namespace orchard
