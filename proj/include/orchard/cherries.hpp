#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orchard/network.hpp"

namespace orchard {

// A cherry {a,b}: leaves sharing a parent. A reticulated cherry (a,b):
// p(a) -> p(b) is an arc and p(b) is a reticulation whose child is b.
enum class PairKind { Cherry, ReticulatedCherry };

bool is_cherry(const PhyloNetwork& net, const std::string& a, const std::string& b);
bool is_reticulated_cherry(const PhyloNetwork& net, const std::string& a, const std::string& b);

// Cherries as (a,b) with a < b, sorted; reticulated cherries as ordered
// (a,b) pairs, sorted.
std::vector<std::pair<std::string, std::string>> find_cherries(const PhyloNetwork& net);
std::vector<std::pair<std::string, std::string>> find_reticulated_cherries(const PhyloNetwork& net);

// Deletes leaf b of the cherry {a,b} and suppresses the shared parent.
// Reducing a cherry at the root yields the single-vertex network on a.
// Surviving vertices keep their ids.
PhyloNetwork reduce_leaf(const PhyloNetwork& net, const std::string& a, const std::string& b);

// Deletes the arc (p(a), p(b)) of the reticulated cherry (a,b) and
// suppresses both endpoints. Surviving vertices keep their ids.
PhyloNetwork cut_reticulated_cherry(const PhyloNetwork& net, const std::string& a,
                                    const std::string& b);

// One reduction step: for a cherry, reduce leaf b keeping a; for a
// reticulated cherry, cut (a,b).
struct PickingStep {
  PairKind kind;
  std::string a;
  std::string b;
};
using PickingSequence = std::vector<PickingStep>;

PhyloNetwork apply_step(const PhyloNetwork& net, const PickingStep& step);

// A picking sequence reducing the network to a single vertex, if one exists.
// Greedy with a deterministic order (cherries before reticulated cherries,
// lexicographic within each kind); by the order-independence of picking,
// greedy succeeds iff any sequence does.
std::optional<PickingSequence> orchard_sequence(const PhyloNetwork& net);

bool is_orchard(const PhyloNetwork& net);

}  // namespace orchard
