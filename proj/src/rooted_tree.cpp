#include "vacctree/rooted_tree.hpp"

#include <algorithm>

namespace vacctree {

RootedTree root_at(const Instance& inst, int root) {
  const int n = inst.n;
  if (root < 0 || root >= n)
    throw ParseError("root " + std::to_string(root) + " out of range [0," +
                     std::to_string(n) + ")");

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : inst.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  RootedTree t;
  t.root = root;
  t.parent.assign(static_cast<size_t>(n), -1);
  t.children.assign(static_cast<size_t>(n), {});
  t.subtree_size.assign(static_cast<size_t>(n), 1);
  t.post_order.reserve(static_cast<size_t>(n));

  // Iterative DFS; the second visit of a frame emits the vertex, so children
  // (explored in ascending order) land in post_order before their parent.
  std::vector<std::pair<int, size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto& nbrs = adj[static_cast<size_t>(u)];
    bool descended = false;
    while (next < nbrs.size()) {
      const int v = nbrs[next++];
      if (v == t.parent[static_cast<size_t>(u)]) continue;
      t.parent[static_cast<size_t>(v)] = u;
      t.children[static_cast<size_t>(u)].push_back(v);
      stack.emplace_back(v, 0);
      descended = true;
      break;
    }
    if (descended) continue;
    t.post_order.push_back(u);
    stack.pop_back();
    if (!stack.empty()) {
      const int p = stack.back().first;
      t.subtree_size[static_cast<size_t>(p)] +=
          t.subtree_size[static_cast<size_t>(u)];
    }
  }
  return t;
}

}  // namespace vacctree
