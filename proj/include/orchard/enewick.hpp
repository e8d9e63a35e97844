#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "orchard/network.hpp"

namespace orchard {

// Extended Newick, restricted to rooted binary phylogenetic networks:
//
//   network    := subtree ';'
//   subtree    := LABEL                        leaf
//               | '(' subtree ',' subtree ')'  tree vertex
//               | '(' subtree ')' '#' LABEL    reticulation, defining use
//               | '#' LABEL                    reticulation, referencing use
//
// Each hybrid tag appears exactly twice, once defining and once referencing,
// in either order. Labels are any run of bytes excluding (),;:#[] and
// whitespace. Square-bracket comments are skipped. No branch lengths (':' is
// reserved and rejected). The single-vertex network is written "label;".
struct EnewickError : std::runtime_error {
  enum class Category { Syntax, Semantic };
  EnewickError(Category cat, std::size_t line, std::size_t column, const std::string& what);
  Category category;
  std::size_t line;    // 1-based
  std::size_t column;  // 1-based
};

PhyloNetwork parse_enewick(std::string_view text);

// Canonical serialization: children are emitted in the order induced by the
// canonical form of the network, and hybrid tags are numbered #H1, #H2, ...
// in first-encounter order of that traversal. Isomorphic networks serialize
// to identical bytes, and parse(write(n)) is isomorphic to n, so a second
// write returns the first string unchanged.
std::string write_enewick(const PhyloNetwork& net);

}  // namespace orchard
