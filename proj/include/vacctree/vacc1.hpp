#pragma once

#include <span>
#include <vector>

#include "vacctree/ext_value.hpp"
#include "vacctree/instance.hpp"
#include "vacctree/rooted_tree.hpp"

namespace vacctree {

// Subtree tables for the immunization problem. For each vertex u and budget
// b' the cells hold
//   x0[u][b'] = vacc1(T_u, tau,   b')   (no help from u's parent)
//   x1[u][b'] = vacc1(T_u, tau^u, b')   (one unit of help from the parent)
// Rows are stored for b' up to min(bmax, n(T_u)); larger budgets cannot be
// spent inside T_u and read as -inf through the accessor.
struct V1Tables {
  RootedTree tree;
  Threshold tau;
  int bmax = 0;
  std::vector<std::vector<ExtValue>> x0, x1;

  ExtValue x(int j, int u, int budget) const {
    if (budget < 0) return ExtValue::neg_inf();
    const auto& row = (j == 0 ? x0 : x1)[static_cast<size_t>(u)];
    if (budget >= static_cast<int>(row.size())) return ExtValue::neg_inf();
    return row[static_cast<size_t>(budget)];
  }
};

// Post-order sweep filling both tables; O(n^2 * bmax^2) overall.
V1Tables build_v1_tables(const Instance& inst, int bmax, int root = 0);

// vacc1(T, tau, b) = x0(root, b); -inf iff b > n.
ExtValue solve_vacc1(const Instance& inst, int b, int root = 0);

// The immunization set X behind x0(root, b): first-maximizer descent over
// the tables (seed branch before the unseeded branch, equality counts
// ascending, child budgets ascending). Sorted; |X| = b. Throws
// std::invalid_argument when b > n.
std::vector<int> reconstruct_x(const V1Tables& t, int b);
std::vector<int> reconstruct_x(const Instance& inst, int b, int root = 0);

// A minimum dynamic monopoly of (T, tau), read off the b = 0 tables by
// following which branch of the recurrence produced each cell. Sorted.
std::vector<int> reconstruct_monopoly(const V1Tables& t);
std::vector<int> reconstruct_monopoly(const Instance& inst, int root = 0);

// True iff immunizing X and re-solving with budget 0 reproduces value.
bool certify_vacc1(const Instance& inst, std::span<const int> x,
                   ExtValue value, int root = 0);

namespace detail {

// Final layer M(k, p_=, c) of the child knapsack at u: the best sum of
// x1(v_i, b_i) over exact budget partitions with p_= children whose x0 and
// x1 cells coincide. Indexed [p_=][c]. Exposed for the enumeration tests.
std::vector<std::vector<ExtValue>> v1_equality_knapsack(const V1Tables& t,
                                                        int u,
                                                        int budget_cap);

// Effective delta split: delta_j = 0 iff p_= >= threshold. Clamped to 0 for
// tau(u) <= j and to k+1 (never satisfied) for infinite tau(u).
int delta_threshold(ThresholdValue tau_u, int j, int k);

}  // namespace detail

}  // namespace vacctree
