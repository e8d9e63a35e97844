#include "orchard/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orchard/isomorphism.hpp"

namespace orchard {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string write_dot(const PhyloNetwork& net) {
  CanonicalForm canon = canonical_form(net.digraph());
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < canon.order.size(); ++i) position[canon.order[i]] = i;

  std::ostringstream os;
  os << "digraph network {\n";
  for (std::size_t i = 0; i < canon.order.size(); ++i) {
    VertexId v = canon.order[i];
    os << "  n" << i;
    if (net.is_leaf(v)) {
      os << " [shape=none, label=" << quote(net.label(v)) << "]";
    } else if (net.is_reticulation(v)) {
      os << " [shape=box, width=0.15, height=0.15, label=\"\"]";
    } else {
      os << " [shape=point]";
    }
    os << ";\n";
  }
  for (std::size_t i = 0; i < canon.order.size(); ++i) {
    VertexId v = canon.order[i];
    std::vector<std::size_t> heads;
    for (VertexId c : net.children(v)) heads.push_back(position.at(c));
    std::sort(heads.begin(), heads.end());
    for (std::size_t h : heads) os << "  n" << i << " -> n" << h << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace orchard
