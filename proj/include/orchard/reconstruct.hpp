#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orchard/cherries.hpp"
#include "orchard/exhibit.hpp"

namespace orchard {

enum class ReconstructCode {
  BadInput,         // trinet set is not a complete, consistent set over X
  NoReduciblePair,  // no pair is reducible in every trinet containing it
  MalformedTrinet,  // a trinet transformation met a shape it cannot have
  NoIsomorphism,    // marked-parent resolution found no isomorphism
};

struct ReconstructError : std::runtime_error {
  ReconstructError(ReconstructCode code, const std::string& what);
  ReconstructCode code;
};

struct ReduciblePair {
  PairKind kind;
  std::string a;
  std::string b;  // for a cherry, a < b and b is the leaf to reduce
};

// A pair that is reducible in every trinet containing both of its leaves:
// a cherry everywhere it appears, or a reticulated cherry everywhere it
// appears. Cherries are preferred over reticulated cherries, then
// lexicographic (a,b). Requires |X| >= 4. Throws NoReduciblePair.
ReduciblePair find_reducible_pair(const std::vector<std::string>& leaf_set, const TrinetSet& ts);

// Trinet set after reducing leaf b of the cherry {a,b}: the trinets whose
// triple avoids b, unchanged.
TrinetSet transform_trinets_cherry(const TrinetSet& ts, const std::string& a,
                                   const std::string& b);

// Trinet set after cutting the reticulated cherry (a,b): trinets without b
// are unchanged; trinets with both a and b are cut directly; in a trinet on
// {b,x,y}, the arc into the parent of b that the cut destroyed (if any) is
// identified by marked-parent resolution against the trinets on {a,b,x} and
// {a,b,y}, deleted, and the result simplified.
TrinetSet transform_trinets_ret(const TrinetSet& ts, const std::string& a, const std::string& b);

// Which in-arc of b's parent in trinet_bxy the cut (a,b) destroyed.
// FirstParentArc / SecondParentArc refer to the parents of p(b) ordered by
// ascending vertex id; NoDeletion means the parent of b did not survive into
// this trinet and the trinet is unaffected.
//
// Resolution: the network on {b,z} is exhibited twice, once by trinet_abz
// (z = x, then y; the first z where b's parent survives is used) and once by
// trinet_bxy. Provenance names the vertex that absorbed p(a) on one side and
// the vertices that absorbed each parent of p(b) on the other; a
// label-preserving isomorphism between the two exhibits matches the marks to
// decide the arc. No isomorphism means the inputs are not the trinets of one
// network.
enum class CutArcChoice { NoDeletion, FirstParentArc, SecondParentArc };

CutArcChoice resolve_cut_arc(const PhyloNetwork& trinet_bxy, const PhyloNetwork& trinet_abx,
                             const PhyloNetwork& trinet_aby, const std::string& a,
                             const std::string& b);

// Rebuilds, up to isomorphism, the orchard network whose exhibited trinet
// set is `ts` over the leaves `leaf_set` (|X| >= 3). Recurses on a reducible
// pair: transform the trinet set, reconstruct the smaller network, then
// re-attach the pair (subdivide the pendant arc of a and hang b for a
// cherry; subdivide both pendant arcs and add the connecting arc for a
// reticulated cherry). Throws ReconstructError when the input is not the
// trinet set of an orchard network; a wrong result cannot be returned
// silently for consistent input.
//
// `trace`, when set, receives one line per recursion level.
using TraceSink = std::function<void(const std::string&)>;

PhyloNetwork construct_orchard(const std::vector<std::string>& leaf_set, const TrinetSet& ts,
                               const TraceSink& trace = {});

}  // namespace orchard
