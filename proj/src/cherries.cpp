#include "orchard/cherries.hpp"

#include <algorithm>

namespace orchard {

bool is_cherry(const PhyloNetwork& net, const std::string& a, const std::string& b) {
  if (a == b || !net.has_leaf(a) || !net.has_leaf(b)) return false;
  if (net.is_single_vertex()) return false;
  return net.parent_of_leaf(a) == net.parent_of_leaf(b);
}

bool is_reticulated_cherry(const PhyloNetwork& net, const std::string& a, const std::string& b) {
  if (a == b || !net.has_leaf(a) || !net.has_leaf(b)) return false;
  if (net.is_single_vertex()) return false;
  VertexId pa = net.parent_of_leaf(a);
  VertexId pb = net.parent_of_leaf(b);
  return net.is_reticulation(pb) && net.has_arc(pa, pb);
}

std::vector<std::pair<std::string, std::string>> find_cherries(const PhyloNetwork& net) {
  std::vector<std::pair<std::string, std::string>> out;
  if (net.is_single_vertex()) return out;
  const auto& labels = net.leaf_labels();
  for (const auto& a : labels) {
    VertexId pa = net.parent_of_leaf(a);
    for (VertexId c : net.children(pa)) {
      if (!net.is_leaf(c)) continue;
      const std::string& b = net.label(c);
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> find_reticulated_cherries(
    const PhyloNetwork& net) {
  std::vector<std::pair<std::string, std::string>> out;
  if (net.is_single_vertex()) return out;
  for (const auto& b : net.leaf_labels()) {
    VertexId pb = net.parent_of_leaf(b);
    if (!net.is_reticulation(pb)) continue;
    for (VertexId q : net.parents(pb)) {
      for (VertexId c : net.children(q)) {
        if (c != pb && net.is_leaf(c)) out.emplace_back(net.label(c), b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhyloNetwork reduce_leaf(const PhyloNetwork& net, const std::string& a, const std::string& b) {
  if (!is_cherry(net, a, b))
    throw std::invalid_argument("{" + a + "," + b + "} is not a cherry");
  VertexId p = net.parent_of_leaf(a);
  TrackedDigraph g = net.to_digraph();
  g.remove_vertex(net.leaf(b));
  if (p == net.root()) {
    // Root cherry: the whole network was {root, a, b}. Drop the root too and
    // return the single-vertex network on a.
    g.remove_vertex(p);
  } else {
    g.suppress(p);
  }
  return PhyloNetwork(std::move(g));
}

PhyloNetwork cut_reticulated_cherry(const PhyloNetwork& net, const std::string& a,
                                    const std::string& b) {
  if (!is_reticulated_cherry(net, a, b))
    throw std::invalid_argument("(" + a + "," + b + ") is not a reticulated cherry");
  VertexId pa = net.parent_of_leaf(a);
  VertexId pb = net.parent_of_leaf(b);
  TrackedDigraph g = net.to_digraph();
  g.remove_arc(pa, pb);
  g.suppress(pa);
  g.suppress(pb);
  return PhyloNetwork(std::move(g));
}

PhyloNetwork apply_step(const PhyloNetwork& net, const PickingStep& step) {
  return step.kind == PairKind::Cherry ? reduce_leaf(net, step.a, step.b)
                                       : cut_reticulated_cherry(net, step.a, step.b);
}

std::optional<PickingSequence> orchard_sequence(const PhyloNetwork& net) {
  PickingSequence steps;
  PhyloNetwork cur = net;
  while (!cur.is_single_vertex()) {
    auto cherries = find_cherries(cur);
    if (!cherries.empty()) {
      // Reduce the lexicographically larger leaf of the first cherry.
      PickingStep step{PairKind::Cherry, cherries[0].first, cherries[0].second};
      cur = reduce_leaf(cur, step.a, step.b);
      steps.push_back(std::move(step));
      continue;
    }
    auto rets = find_reticulated_cherries(cur);
    if (rets.empty()) return std::nullopt;
    PickingStep step{PairKind::ReticulatedCherry, rets[0].first, rets[0].second};
    cur = cut_reticulated_cherry(cur, step.a, step.b);
    steps.push_back(std::move(step));
  }
  return steps;
}

bool is_orchard(const PhyloNetwork& net) { return orchard_sequence(net).has_value(); }

}  // namespace orchard
