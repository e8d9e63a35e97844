#include "orchard/network.hpp"

#include <algorithm>
#include <deque>

namespace orchard {

PhyloNetwork::PhyloNetwork(TrackedDigraph g) : g_(std::move(g)) {
  ValidationReport report = g_.validate();
  if (!report.ok()) throw ValidationError(std::move(report));
  root_ = *g_.single_root();
  retics_ = g_.reticulation_count();
  for (VertexId v : g_.vertex_ids()) {
    const auto& rec = g_.at(v);
    if (rec.label) {
      leaf_labels_.push_back(*rec.label);
      leaf_by_label_.emplace(*rec.label, v);
    }
  }
  std::sort(leaf_labels_.begin(), leaf_labels_.end());
}

VertexKind PhyloNetwork::kind(VertexId v) const {
  const auto& rec = g_.at(v);
  if (rec.label) return VertexKind::Leaf;  // the single-vertex network's root counts as a leaf
  if (rec.parents.empty()) return VertexKind::Root;
  return rec.parents.size() == 2 ? VertexKind::Reticulation : VertexKind::TreeVertex;
}

const std::string& PhyloNetwork::label(VertexId v) const {
  const auto& rec = g_.at(v);
  if (!rec.label) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
  return *rec.label;
}

VertexId PhyloNetwork::leaf(const std::string& label) const {
  auto it = leaf_by_label_.find(label);
  if (it == leaf_by_label_.end()) throw std::invalid_argument("no leaf labeled \"" + label + "\"");
  return it->second;
}

bool PhyloNetwork::has_leaf(const std::string& label) const {
  return leaf_by_label_.count(label) != 0;
}

VertexId PhyloNetwork::parent_of_leaf(const std::string& label) const {
  VertexId v = leaf(label);
  const auto& ps = g_.at(v).parents;
  if (ps.empty())
    throw std::invalid_argument("leaf \"" + label + "\" is the whole network; it has no parent");
  return ps[0];
}

TrackedDigraph PhyloNetwork::to_digraph() const {
  TrackedDigraph out;
  for (VertexId v : g_.vertex_ids()) out.add_vertex_with_id(v, g_.at(v).label);
  for (VertexId v : g_.vertex_ids())
    for (VertexId c : g_.at(v).children) out.add_arc(v, c);
  return out;
}

bool is_ancestor(const PhyloNetwork& net, VertexId u, VertexId v) {
  return net.digraph().reaches(u, v);
}

namespace {

// Every root-to-target path passes through v iff target is unreachable from
// the root once v is removed. Removing the root (or the target) itself makes
// the target unreachable, so root and target come out stable, as they should.
bool stable_for_leaf(const PhyloNetwork& net, VertexId v, VertexId target) {
  if (v == target || v == net.root()) return true;
  std::set<VertexId> seen{net.root()};
  std::deque<VertexId> queue{net.root()};
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (VertexId c : net.children(w)) {
      if (c == v) continue;
      if (c == target) return false;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return true;
}

}  // namespace

std::vector<VertexId> stable_ancestors(const PhyloNetwork& net,
                                       const std::vector<std::string>& labels) {
  if (labels.empty())
    throw std::invalid_argument("stable ancestors of the empty leaf set are undefined");
  std::vector<VertexId> targets;
  for (const auto& l : labels) targets.push_back(net.leaf(l));

  std::vector<VertexId> out;
  for (VertexId v : net.vertex_ids()) {
    bool all = true;
    for (VertexId t : targets) {
      if (!stable_for_leaf(net, v, t)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(v);
  }
  return out;
}

VertexId lowest_stable_ancestor(const PhyloNetwork& net,
                                const std::vector<std::string>& labels) {
  std::vector<VertexId> stable = stable_ancestors(net, labels);
  for (VertexId v : stable) {
    bool lowest = true;
    for (VertexId u : stable) {
      if (!is_ancestor(net, u, v)) {
        lowest = false;
        break;
      }
    }
    if (lowest) return v;
  }
  // Unreachable: stable ancestors of a non-empty set form an ancestry chain.
  throw std::logic_error("stable ancestors are not totally ordered");
}

bool is_recoverable(const PhyloNetwork& net) {
  return lowest_stable_ancestor(net, net.leaf_labels()) == net.root();
}

}  // namespace orchard
