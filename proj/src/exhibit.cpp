#include "orchard/exhibit.hpp"

#include <algorithm>
#include <deque>

#include "orchard/isomorphism.hpp"

namespace orchard {

TrackedDigraph path_graph(const PhyloNetwork& net, const std::vector<std::string>& labels) {
  VertexId top = lowest_stable_ancestor(net, labels);

  // Downward reachability from the lsa.
  std::vector<VertexId> below = net.digraph().reachable_from(top);
  std::set<VertexId> from_top(below.begin(), below.end());

  // Upward reachability from the selected leaves.
  std::set<VertexId> to_leaf;
  std::deque<VertexId> queue;
  for (const auto& l : labels) {
    VertexId v = net.leaf(l);
    if (to_leaf.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId p : net.parents(v))
      if (to_leaf.insert(p).second) queue.push_back(p);
  }

  TrackedDigraph out;
  for (VertexId v : net.vertex_ids())
    if (from_top.count(v) && to_leaf.count(v))
      out.add_vertex_with_id(v, net.digraph().at(v).label);
  for (VertexId v : net.vertex_ids()) {
    if (!from_top.count(v)) continue;
    for (VertexId c : net.children(v))
      if (to_leaf.count(c)) out.add_arc(v, c);
  }
  return out;
}

PhyloNetwork exhibit(const PhyloNetwork& net, const std::vector<std::string>& labels) {
  TrackedDigraph g = path_graph(net, labels);
  g.fully_simplify();
  return PhyloNetwork(std::move(g));
}

LeafTriple make_triple(std::string a, std::string b, std::string c) {
  LeafTriple t{std::move(a), std::move(b), std::move(c)};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("leaf triple must have three distinct labels");
  return t;
}

TrinetSet trinet_set(const PhyloNetwork& net) {
  if (net.leaf_count() < 3)
    throw std::invalid_argument("trinet set requires at least 3 leaves");
  if (!is_recoverable(net))
    throw std::invalid_argument("trinet set requires a recoverable network");
  const auto& labels = net.leaf_labels();
  TrinetSet out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      for (std::size_t k = j + 1; k < labels.size(); ++k)
        out.emplace(LeafTriple{labels[i], labels[j], labels[k]},
                    exhibit(net, {labels[i], labels[j], labels[k]}));
  return out;
}

bool trinet_sets_equal(const TrinetSet& s, const TrinetSet& t) {
  if (s.size() != t.size()) return false;
  auto it = t.begin();
  for (const auto& [triple, net] : s) {
    if (it->first != triple) return false;
    if (!is_isomorphic(net, it->second)) return false;
    ++it;
  }
  return true;
}

}  // namespace orchard
