#pragma once

#include <vector>

#include "vacctree/instance.hpp"

namespace vacctree {

// Rooted view of a tree instance. Children are listed in ascending label
// order and post_order lists every child before its parent, so a single
// forward sweep over post_order visits each subtree bottom-up.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // ascending labels
  std::vector<int> post_order;
  std::vector<int> subtree_size;  // n(T_u)
};

// Roots a validated tree instance; throws ParseError if root is out of range.
RootedTree root_at(const Instance& inst, int root);

}  // namespace vacctree
