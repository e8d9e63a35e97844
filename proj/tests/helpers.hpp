#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orchard/cherries.hpp"
#include "orchard/enewick.hpp"
#include "orchard/generator.hpp"
#include "orchard/network.hpp"

namespace testing {

using namespace orchard;

inline std::string fixture_path(const std::string& name) {
  return std::string(ORCHARD_FIXTURE_DIR) + "/" + name;
}

inline PhyloNetwork load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_enewick(os.str());
}

// ---- Independent oracles -------------------------------------------------
//
// These deliberately re-derive results by exhaustive path enumeration, not
// by the library's reachability algorithms, so the two sides can disagree.

// Every directed path from `from` to the leaf labeled `to`, as vertex
// sequences. Exponential; test networks are small.
inline void all_paths_rec(const PhyloNetwork& net, VertexId at, VertexId to,
                          std::vector<VertexId>& prefix,
                          std::vector<std::vector<VertexId>>& out) {
  prefix.push_back(at);
  if (at == to) {
    out.push_back(prefix);
  } else {
    for (VertexId c : net.children(at)) all_paths_rec(net, c, to, prefix, out);
  }
  prefix.pop_back();
}

inline std::vector<std::vector<VertexId>> all_root_paths(const PhyloNetwork& net,
                                                         const std::string& leaf) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> prefix;
  all_paths_rec(net, net.root(), net.leaf(leaf), prefix, out);
  return out;
}

// Stable ancestors by definition: the vertices present on every root path of
// every chosen leaf.
inline std::set<VertexId> oracle_stable_ancestors(const PhyloNetwork& net,
                                                  const std::vector<std::string>& labels) {
  std::set<VertexId> common;
  bool first = true;
  for (const auto& l : labels) {
    for (const auto& path : all_root_paths(net, l)) {
      std::set<VertexId> here(path.begin(), path.end());
      if (first) {
        common = here;
        first = false;
      } else {
        std::set<VertexId> keep;
        for (VertexId v : common)
          if (here.count(v)) keep.insert(v);
        common = keep;
      }
    }
  }
  return common;
}

// The lowest stable ancestor is the stable ancestor deepest along any one
// root path (they all lie on it, in ancestor-before-descendant order).
inline VertexId oracle_lsa(const PhyloNetwork& net, const std::vector<std::string>& labels) {
  std::set<VertexId> stable = oracle_stable_ancestors(net, labels);
  std::vector<VertexId> path = all_root_paths(net, labels.front()).front();
  VertexId best = net.root();
  for (VertexId v : path)
    if (stable.count(v)) best = v;  // later on the path = deeper
  return best;
}

// Brute-force label-preserving digraph isomorphism by backtracking over
// vertex assignments. Usable up to a dozen vertices; independent of the
// canonical-form engine.
struct BruteIso {
  const TrackedDigraph& a;
  const TrackedDigraph& b;
  std::vector<VertexId> av, bv;
  std::map<VertexId, VertexId> assign;
  std::set<VertexId> used;

  bool compatible(VertexId x, VertexId y) {
    const auto& ra = a.at(x);
    const auto& rb = b.at(y);
    if (ra.label != rb.label) return false;
    if (ra.children.size() != rb.children.size()) return false;
    if (ra.parents.size() != rb.parents.size()) return false;
    // Arcs to already-assigned vertices must map correctly, both directions.
    for (const auto& [u, v] : assign) {
      if (a.has_arc(x, u) != b.has_arc(y, v)) return false;
      if (a.has_arc(u, x) != b.has_arc(v, y)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == av.size()) return true;
    for (VertexId y : bv) {
      if (used.count(y) || !compatible(av[i], y)) continue;
      assign[av[i]] = y;
      used.insert(y);
      if (extend(i + 1)) return true;
      assign.erase(av[i]);
      used.erase(y);
    }
    return false;
  }
};

inline bool oracle_isomorphic(const TrackedDigraph& a, const TrackedDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  BruteIso s{a, b, a.vertex_ids(), b.vertex_ids(), {}, {}};
  return s.extend(0);
}

inline bool oracle_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b) {
  return oracle_isomorphic(a.digraph(), b.digraph());
}

// ---- Random-instance helpers ----------------------------------------------

// A deterministic pool of generated orchard networks with |V| <= 4 + 2*12.
inline std::vector<PhyloNetwork> network_pool(std::size_t count, std::uint64_t seed_base) {
  std::vector<PhyloNetwork> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    std::size_t n = 3 + i % 6;           // 3..8 leaves
    std::size_t r = (i / 6) % 5;         // 0..4 reticulations
    out.push_back(random_orchard(n, r, seed_base + i));
  }
  return out;
}

// Reduces with uniformly chosen reducible pairs until single-vertex or
// stuck; returns true iff it reached the single vertex.
inline bool random_picking_succeeds(const PhyloNetwork& net, Rng& rng) {
  PhyloNetwork cur = net;
  while (!cur.is_single_vertex()) {
    std::vector<PickingStep> all;
    for (const auto& [a, b] : find_cherries(cur)) {
      all.push_back({PairKind::Cherry, a, b});
      all.push_back({PairKind::Cherry, b, a});  // either leaf may be reduced
    }
    for (const auto& [a, b] : find_reticulated_cherries(cur))
      all.push_back({PairKind::ReticulatedCherry, a, b});
    if (all.empty()) return false;
    cur = apply_step(cur, all[rng.bounded(all.size())]);
  }
  return true;
}

// A generated orchard network guaranteed to contain a reticulated cherry:
// one more reticulated-cherry move is appended by hand if needed.
inline PhyloNetwork with_reticulated_cherry(std::size_t n, std::size_t r, std::uint64_t seed) {
  PhyloNetwork net = random_orchard(n, r, seed);
  if (!find_reticulated_cherries(net).empty()) return net;
  TrackedDigraph g = net.to_digraph();
  const auto& labels = net.leaf_labels();
  VertexId u = net.leaf(labels[0]);
  VertexId v = net.leaf(labels[1]);
  VertexId w1 = g.subdivide_arc(g.at(u).parents[0], u);
  VertexId w2 = g.subdivide_arc(g.at(v).parents[0], v);
  g.add_arc(w1, w2);
  return PhyloNetwork(std::move(g));
}

}  // namespace testing
