#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

struct Violation {
  std::string message;
  std::vector<VertexId> vertices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport r);
  ValidationReport report;
};

// One pending simplification move: suppress an in-1/out-1 vertex, or delete
// one arc of a parallel pair.
struct Reduction {
  enum class Kind { Suppress, DropParallelArc };
  Kind kind;
  VertexId vertex = kNoVertex;  // Suppress
  VertexId tail = kNoVertex;    // DropParallelArc
  VertexId head = kNoVertex;
};

// Mutable directed multigraph with stable sparse vertex ids, optional leaf
// labels, and provenance tracking.
//
// Provenance: every vertex carries the set of original vertex ids that have
// been absorbed into it. A fresh vertex absorbs only itself. Suppressing v
// merges v's absorbed set into its parent, so after any sequence of
// suppressions, holder_of(x) is the surviving vertex that the original
// vertex x was folded into. This is the marker mechanism used both by the
// exhibit operation and by the marked-parent resolution in reconstruction.
class TrackedDigraph {
 public:
  struct Vertex {
    std::vector<VertexId> children;  // sorted; duplicates encode parallel arcs
    std::vector<VertexId> parents;   // sorted; duplicates encode parallel arcs
    std::optional<std::string> label;
    std::set<VertexId> absorbed;
  };

  TrackedDigraph() = default;

  VertexId add_vertex();
  VertexId add_leaf(const std::string& label);
  // Inserts a vertex with a caller-chosen id (used when copying subgraphs so
  // ids are preserved). Throws if the id is taken or negative.
  VertexId add_vertex_with_id(VertexId id, std::optional<std::string> label = std::nullopt);

  void add_arc(VertexId tail, VertexId head);
  // Removes one multiplicity of the arc; throws if absent.
  void remove_arc(VertexId tail, VertexId head);
  // Removes the vertex and all incident arcs. Its provenance is discarded.
  void remove_vertex(VertexId v);
  // Replaces arc (tail,head) by tail -> w -> head and returns the new w.
  VertexId subdivide_arc(VertexId tail, VertexId head);
  // Precondition: in-degree 1 and out-degree 1. Deletes v, adds the bypass
  // arc parent -> child, and merges v's absorbed set into the parent.
  void suppress(VertexId v);

  bool contains(VertexId v) const { return vertices_.count(v) != 0; }
  const Vertex& at(VertexId v) const;
  std::size_t in_degree(VertexId v) const { return at(v).parents.size(); }
  std::size_t out_degree(VertexId v) const { return at(v).children.size(); }
  bool has_arc(VertexId tail, VertexId head) const;

  std::vector<VertexId> vertex_ids() const;  // ascending
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const;
  std::size_t reticulation_count() const;  // vertices with in-degree >= 2
  // The unique in-degree-0 vertex, or nullopt if there is not exactly one.
  std::optional<VertexId> single_root() const;

  // Provenance queries. holder_of returns the vertex whose absorbed set
  // contains `source`, or kNoVertex if that vertex was deleted outright.
  VertexId holder_of(VertexId source) const;
  const std::set<VertexId>& absorbed(VertexId v) const { return at(v).absorbed; }

  // All vertices reachable from `from` (including it), ascending.
  std::vector<VertexId> reachable_from(VertexId from) const;
  // Whether a directed path from -> to exists (reflexively true).
  bool reaches(VertexId from, VertexId to) const;
  // Leaf ids (labeled vertices) reachable from each vertex.
  std::map<VertexId, std::set<VertexId>> leaf_descendant_sets() const;

  // Simplification moves currently available, in the fixed deterministic
  // order: suppressions by ascending vertex id first, then parallel-arc
  // deletions by ascending (tail, head).
  std::vector<Reduction> available_reductions() const;
  void apply(const Reduction& r);
  // Applies the first available reduction until none remain.
  void fully_simplify();
  // Repeatedly removes unlabeled vertices of out-degree zero.
  void delete_barren_vertices();
  // Repeatedly removes an unlabeled in-0/out-1 apex, re-rooting the graph at
  // the first branching vertex below a dead root chain.
  void trim_root_chain();

  // Structural checks for a rooted binary phylogenetic network. Empty report
  // means: unique root of out-degree 2 (or the single labeled vertex),
  // acyclic, no parallel arcs, every vertex reachable from the root, every
  // out-degree-0 vertex labeled with in-degree 1, internal vertices in-1/out-2
  // or in-2/out-1, labels distinct / non-empty / free of (),;:#[] and
  // whitespace, and |V| = 2(|X| + r) - 1.
  ValidationReport validate() const;

 private:
  std::map<VertexId, Vertex> vertices_;
  VertexId next_id_ = 0;
};

}  // namespace orchard
