#pragma once

#include <string>
#include <vector>

#include "orchard/digraph.hpp"

namespace orchard {

enum class VertexKind { Root, Leaf, TreeVertex, Reticulation };

// A rooted binary phylogenetic network: validated, immutable. Vertex ids are
// stable and may be sparse; derived networks keep the ids of the vertices
// that survive. In a network produced by exhibit(), each vertex also carries
// the set of source-network vertices absorbed into it (see TrackedDigraph).
class PhyloNetwork {
 public:
  // Validates and wraps; throws ValidationError otherwise.
  explicit PhyloNetwork(TrackedDigraph g);

  VertexId root() const { return root_; }
  bool is_single_vertex() const { return g_.vertex_count() == 1; }

  std::size_t vertex_count() const { return g_.vertex_count(); }
  std::size_t arc_count() const { return g_.arc_count(); }
  std::size_t reticulation_count() const { return retics_; }
  std::size_t leaf_count() const { return leaf_labels_.size(); }

  bool contains(VertexId v) const { return g_.contains(v); }
  std::vector<VertexId> vertex_ids() const { return g_.vertex_ids(); }
  const std::vector<VertexId>& children(VertexId v) const { return g_.at(v).children; }
  const std::vector<VertexId>& parents(VertexId v) const { return g_.at(v).parents; }
  bool has_arc(VertexId tail, VertexId head) const { return g_.has_arc(tail, head); }

  VertexKind kind(VertexId v) const;
  bool is_leaf(VertexId v) const { return g_.at(v).label.has_value(); }
  bool is_reticulation(VertexId v) const { return g_.at(v).parents.size() == 2; }

  // Leaf lookups. label() throws on a non-leaf; leaf() throws on an unknown
  // label. leaf_labels() is sorted.
  const std::string& label(VertexId v) const;
  VertexId leaf(const std::string& label) const;
  bool has_leaf(const std::string& label) const;
  const std::vector<std::string>& leaf_labels() const { return leaf_labels_; }
  // The unique parent of the named leaf; throws on the single-vertex network.
  VertexId parent_of_leaf(const std::string& label) const;

  // Provenance carried over from an exhibit (singleton sets otherwise).
  const std::set<VertexId>& absorbed(VertexId v) const { return g_.absorbed(v); }
  // The vertex whose absorbed set contains `source`, or kNoVertex.
  VertexId holder_of(VertexId source) const { return g_.holder_of(source); }

  // Mutable copy of the underlying graph, provenance reset to singletons.
  TrackedDigraph to_digraph() const;
  const TrackedDigraph& digraph() const { return g_; }

 private:
  TrackedDigraph g_;
  VertexId root_ = kNoVertex;
  std::size_t retics_ = 0;
  std::vector<std::string> leaf_labels_;
  std::map<std::string, VertexId> leaf_by_label_;
};

// True iff a directed path u -> v exists (reflexively true).
bool is_ancestor(const PhyloNetwork& net, VertexId u, VertexId v);

// All vertices v such that every root-to-x path passes through v, for every
// leaf label x in `labels`. The result is totally ordered by ancestry and
// always contains the root. Throws std::invalid_argument on an empty set or
// an unknown label.
std::vector<VertexId> stable_ancestors(const PhyloNetwork& net,
                                       const std::vector<std::string>& labels);

// The unique minimal element of stable_ancestors(net, labels): the stable
// ancestor that every other stable ancestor is an ancestor of.
VertexId lowest_stable_ancestor(const PhyloNetwork& net,
                                const std::vector<std::string>& labels);

// True iff the lowest stable ancestor of the full leaf set is the root.
bool is_recoverable(const PhyloNetwork& net);

}  // namespace orchard
