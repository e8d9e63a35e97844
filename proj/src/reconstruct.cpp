#include "orchard/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "orchard/isomorphism.hpp"

namespace orchard {

ReconstructError::ReconstructError(ReconstructCode code, const std::string& what)
    : std::runtime_error(what), code(code) {}

namespace {

[[noreturn]] void fail(ReconstructCode code, const std::string& what) {
  throw ReconstructError(code, what);
}

std::string triple_text(const LeafTriple& t) { return t[0] + "," + t[1] + "," + t[2]; }

// The trinets containing both labels, i.e. keyed by {a,b,c} for each other
// leaf c.
std::vector<const PhyloNetwork*> trinets_with_pair(const std::vector<std::string>& leaf_set,
                                                   const TrinetSet& ts, const std::string& a,
                                                   const std::string& b) {
  std::vector<const PhyloNetwork*> out;
  for (const auto& c : leaf_set) {
    if (c == a || c == b) continue;
    auto it = ts.find(make_triple(a, b, c));
    if (it == ts.end())
      fail(ReconstructCode::BadInput, "trinet set has no entry for {" + a + "," + b + "," + c + "}");
    out.push_back(&it->second);
  }
  return out;
}

}  // namespace

ReduciblePair find_reducible_pair(const std::vector<std::string>& leaf_set, const TrinetSet& ts) {
  if (leaf_set.size() < 4)
    throw std::invalid_argument("finding a reducible pair requires at least 4 leaves");
  std::vector<std::string> labels = leaf_set;
  std::sort(labels.begin(), labels.end());

  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      auto shared = trinets_with_pair(labels, ts, labels[i], labels[j]);
      bool all = std::all_of(shared.begin(), shared.end(), [&](const PhyloNetwork* t) {
        return is_cherry(*t, labels[i], labels[j]);
      });
      if (all) return {PairKind::Cherry, labels[i], labels[j]};
    }
  }
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      if (a == b) continue;
      auto shared = trinets_with_pair(labels, ts, a, b);
      bool all = std::all_of(shared.begin(), shared.end(), [&](const PhyloNetwork* t) {
        return is_reticulated_cherry(*t, a, b);
      });
      if (all) return {PairKind::ReticulatedCherry, a, b};
    }
  }
  fail(ReconstructCode::NoReduciblePair,
       "no pair of leaves is reducible in every trinet containing it");
}

TrinetSet transform_trinets_cherry(const TrinetSet& ts, const std::string& a,
                                   const std::string& b) {
  (void)a;
  TrinetSet out;
  for (const auto& [triple, net] : ts)
    if (std::find(triple.begin(), triple.end(), b) == triple.end()) out.emplace(triple, net);
  return out;
}

CutArcChoice resolve_cut_arc(const PhyloNetwork& trinet_bxy, const PhyloNetwork& trinet_abx,
                             const PhyloNetwork& trinet_aby, const std::string& a,
                             const std::string& b) {
  std::vector<std::string> others;
  for (const auto& l : trinet_bxy.leaf_labels())
    if (l != b) others.push_back(l);
  if (others.size() != 2 || !trinet_bxy.has_leaf(b))
    throw std::invalid_argument("expected a trinet on {" + b + ",x,y}");

  // One construction of the pair network on {b,z}: the network exhibited by
  // the trinet on {a,b,z}. The parent of a dissolves into one of the parents
  // of b's parent, and provenance names it. Succeeds for the first z (x
  // before y) where b's parent survives; its survival here decides whether
  // the cut touched this trinet at all. Both constructions root at the
  // lowest stable ancestor of {b,z}, so they are comparable exhibits rather
  // than raw deletion residues, which can strand the old root as an
  // in-0/out-1 chain on one side only.
  std::optional<PhyloNetwork> g_z;
  VertexId mark_z = kNoVertex;
  std::string z;
  for (std::size_t pick = 0; pick < 2 && !g_z; ++pick) {
    const PhyloNetwork& tz = pick == 0 ? trinet_abx : trinet_aby;
    if (!is_reticulated_cherry(tz, a, b))
      fail(ReconstructCode::MalformedTrinet,
           "(" + a + "," + b + ") is not a reticulated cherry of the trinet on {" + a + "," + b +
               "," + others[pick] + "}");
    VertexId pa = tz.parent_of_leaf(a);
    VertexId pb = tz.parent_of_leaf(b);
    PhyloNetwork e = exhibit(tz, {b, others[pick]});
    if (!e.contains(pb)) continue;
    mark_z = e.holder_of(pa);
    if (mark_z == kNoVertex)
      fail(ReconstructCode::MalformedTrinet, "lost track of the marked parent of " + a);
    g_z = std::move(e);
    z = others[pick];
  }
  if (!g_z) return CutArcChoice::NoDeletion;

  // b's parent must have survived into this trinet as a reticulation.
  VertexId pb = trinet_bxy.parent_of_leaf(b);
  if (!trinet_bxy.is_reticulation(pb))
    fail(ReconstructCode::MalformedTrinet,
         "parent of " + b + " survived the cut elsewhere but is not a reticulation in the trinet on {" +
             b + "," + others[0] + "," + others[1] + "}");
  VertexId p1 = trinet_bxy.parents(pb)[0];
  VertexId p2 = trinet_bxy.parents(pb)[1];

  // The other construction of the same pair network: the network exhibited
  // by the trinet on {b,x,y}, with both parents of b's parent tracked.
  PhyloNetwork g2 = exhibit(trinet_bxy, {b, z});
  VertexId mark_1 = g2.holder_of(p1);
  VertexId mark_2 = g2.holder_of(p2);
  if (mark_1 == kNoVertex || mark_2 == kNoVertex)
    fail(ReconstructCode::MalformedTrinet, "lost track of a marked parent of p(" + b + ")");

  auto iso = find_isomorphism(*g_z, g2);
  if (!iso)
    fail(ReconstructCode::NoIsomorphism,
         "the two constructions of the network on {" + b + "," + z + "} disagree");
  VertexId image = iso->at(mark_z);
  if (image == mark_1) return CutArcChoice::FirstParentArc;
  if (image == mark_2) return CutArcChoice::SecondParentArc;
  fail(ReconstructCode::MalformedTrinet,
       "marked vertex did not land on a parent of p(" + b + ")");
}

TrinetSet transform_trinets_ret(const TrinetSet& ts, const std::string& a, const std::string& b) {
  TrinetSet out;
  for (const auto& [triple, net] : ts) {
    bool has_a = std::find(triple.begin(), triple.end(), a) != triple.end();
    bool has_b = std::find(triple.begin(), triple.end(), b) != triple.end();
    if (!has_b) {
      out.emplace(triple, net);
      continue;
    }
    if (has_a) {
      if (!is_reticulated_cherry(net, a, b))
        fail(ReconstructCode::MalformedTrinet, "(" + a + "," + b +
                                                   ") is not a reticulated cherry of the trinet on {" +
                                                   triple_text(triple) + "}");
      out.emplace(triple, cut_reticulated_cherry(net, a, b));
      continue;
    }

    std::vector<std::string> xy;
    for (const auto& l : triple)
      if (l != b) xy.push_back(l);
    auto find_trinet = [&](const std::string& z) -> const PhyloNetwork& {
      auto it = ts.find(make_triple(a, b, z));
      if (it == ts.end())
        fail(ReconstructCode::BadInput,
             "trinet set has no entry for {" + a + "," + b + "," + z + "}");
      return it->second;
    };
    CutArcChoice choice =
        resolve_cut_arc(net, find_trinet(xy[0]), find_trinet(xy[1]), a, b);
    if (choice == CutArcChoice::NoDeletion) {
      out.emplace(triple, net);
      continue;
    }

    VertexId pb = net.parent_of_leaf(b);
    VertexId tail = choice == CutArcChoice::FirstParentArc ? net.parents(pb)[0]
                                                           : net.parents(pb)[1];
    TrackedDigraph g = net.to_digraph();
    g.remove_arc(tail, pb);
    g.delete_barren_vertices();
    g.fully_simplify();
    // When the deleted arc hung off the trinet's root, the root drops to
    // out-degree one; the residue roots at the first branching vertex below.
    g.trim_root_chain();
    try {
      PhyloNetwork residue(std::move(g));
      // The deletion can also strand a wider region between the old root
      // and the leaves' new lowest stable ancestor, one that survives
      // simplification because its degrees stay legal. Exhibiting the
      // residue on its own leaf set prunes that region and is the identity
      // otherwise.
      out.emplace(triple, exhibit(residue, residue.leaf_labels()));
    } catch (const ValidationError& e) {
      fail(ReconstructCode::MalformedTrinet,
           "cutting the trinet on {" + triple_text(triple) + "} left an invalid network: " +
               e.what());
    }
  }
  return out;
}

namespace {

PhyloNetwork construct_level(std::vector<std::string> labels, const TrinetSet& ts,
                             const TraceSink& trace, std::size_t depth) {
  std::sort(labels.begin(), labels.end());
  if (labels.size() == 3) {
    auto it = ts.find(LeafTriple{labels[0], labels[1], labels[2]});
    if (it == ts.end() || ts.size() != 1)
      fail(ReconstructCode::BadInput, "expected exactly the trinet on the remaining 3 leaves");
    if (trace)
      trace("level " + std::to_string(depth) + ": 3 leaves remain, returning their trinet");
    return it->second;
  }

  ReduciblePair pair = find_reducible_pair(labels, ts);
  if (trace) {
    std::ostringstream os;
    os << "level " << depth << ": " << labels.size() << " leaves, ";
    if (pair.kind == PairKind::Cherry)
      os << "cherry {" << pair.a << "," << pair.b << "}: reduce " << pair.b;
    else
      os << "reticulated cherry (" << pair.a << "," << pair.b << "): cut";
    trace(os.str());
  }

  if (pair.kind == PairKind::Cherry) {
    TrinetSet smaller = transform_trinets_cherry(ts, pair.a, pair.b);
    std::vector<std::string> rest;
    for (const auto& l : labels)
      if (l != pair.b) rest.push_back(l);
    PhyloNetwork core = construct_level(std::move(rest), smaller, trace, depth + 1);

    TrackedDigraph g = core.to_digraph();
    VertexId va = core.leaf(pair.a);
    VertexId w = g.subdivide_arc(core.parent_of_leaf(pair.a), va);
    VertexId vb = g.add_leaf(pair.b);
    g.add_arc(w, vb);
    return PhyloNetwork(std::move(g));
  }

  TrinetSet smaller = transform_trinets_ret(ts, pair.a, pair.b);
  PhyloNetwork core = construct_level(labels, smaller, trace, depth + 1);

  TrackedDigraph g = core.to_digraph();
  VertexId wa = g.subdivide_arc(core.parent_of_leaf(pair.a), core.leaf(pair.a));
  VertexId wb = g.subdivide_arc(core.parent_of_leaf(pair.b), core.leaf(pair.b));
  g.add_arc(wa, wb);
  return PhyloNetwork(std::move(g));
}

}  // namespace

PhyloNetwork construct_orchard(const std::vector<std::string>& leaf_set, const TrinetSet& ts,
                               const TraceSink& trace) {
  std::vector<std::string> labels = leaf_set;
  std::sort(labels.begin(), labels.end());
  if (labels.size() < 3)
    fail(ReconstructCode::BadInput, "reconstruction requires at least 3 leaves");
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    fail(ReconstructCode::BadInput, "leaf set contains duplicates");

  // The input must be one trinet per 3-subset of the leaf set, each on
  // exactly its triple and recoverable.
  std::size_t n = labels.size();
  if (ts.size() != n * (n - 1) * (n - 2) / 6)
    fail(ReconstructCode::BadInput,
         "expected " + std::to_string(n * (n - 1) * (n - 2) / 6) + " trinets, got " +
             std::to_string(ts.size()));
  for (const auto& [triple, net] : ts) {
    for (const auto& l : triple)
      if (!std::binary_search(labels.begin(), labels.end(), l))
        fail(ReconstructCode::BadInput,
             "trinet on {" + triple_text(triple) + "} uses a label outside the leaf set");
    std::vector<std::string> leaves = net.leaf_labels();
    if (!std::equal(leaves.begin(), leaves.end(), triple.begin(), triple.end()))
      fail(ReconstructCode::BadInput,
           "trinet keyed {" + triple_text(triple) + "} has a different leaf set");
    if (!is_recoverable(net))
      fail(ReconstructCode::BadInput,
           "trinet on {" + triple_text(triple) + "} is not recoverable");
  }

  return construct_level(std::move(labels), ts, trace, 0);
}

}  // namespace orchard
