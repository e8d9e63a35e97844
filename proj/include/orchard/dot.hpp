#pragma once

#include <string>

#include "orchard/network.hpp"

namespace orchard {

// Graphviz rendering. Vertices are named n0, n1, ... by canonical position,
// so isomorphic networks render to identical bytes. Tree vertices and the
// root are points, reticulations are boxes, leaves show their labels.
std::string write_dot(const PhyloNetwork& net);

}  // namespace orchard
