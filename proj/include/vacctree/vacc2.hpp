#pragma once

#include <span>
#include <vector>

#include "vacctree/ext_value.hpp"
#include "vacctree/instance.hpp"
#include "vacctree/rooted_tree.hpp"

namespace vacctree {

// Subtree tables for the deletion problem. For each vertex u and budget b'
//   y_in[u][b'] = max dyn(T_u - Y, tau)   over |Y| = b', u in Y
//   y0[u][b']   = max dyn(T_u - Y, tau)   over |Y| = b', u not in Y
//   y1[u][b']   = max dyn(T_u - Y, tau^u) over |Y| = b', u not in Y
// y_in rows run to min(bmax, n(T_u)) with cell 0 = -inf; y0/y1 rows run to
// min(bmax, n(T_u) - 1). Budgets outside a row read as -inf.
struct V2Tables {
  RootedTree tree;
  Threshold tau;
  int bmax = 0;
  std::vector<std::vector<ExtValue>> y_in, y0, y1;

  ExtValue yin(int u, int budget) const {
    if (budget < 0) return ExtValue::neg_inf();
    const auto& row = y_in[static_cast<size_t>(u)];
    if (budget >= static_cast<int>(row.size())) return ExtValue::neg_inf();
    return row[static_cast<size_t>(budget)];
  }
  ExtValue y(int j, int u, int budget) const {
    if (budget < 0) return ExtValue::neg_inf();
    const auto& row = (j == 0 ? y0 : y1)[static_cast<size_t>(u)];
    if (budget >= static_cast<int>(row.size())) return ExtValue::neg_inf();
    return row[static_cast<size_t>(budget)];
  }
  // vacc2(T_u, tau, b) = max(y_in(u, b), y0(u, b)).
  ExtValue value_at(int u, int budget) const {
    return std::max(yin(u, budget), y(0, u, budget));
  }
};

// Post-order sweep; O(sum_u deg(u)^3 * bmax^2), i.e. O(n^3 * bmax^2).
V2Tables build_v2_tables(const Instance& inst, int bmax, int root = 0);

// vacc2(T, tau, b); -inf iff b > n.
ExtValue solve_vacc2(const Instance& inst, int b, int root = 0);

// The deletion set Y behind the root value: first-maximizer descent (the
// delete-u branch before the keep-u branch, deleted-child counts and
// equality counts ascending, child budgets ascending, kept before deleted
// at equal budget). Sorted; |Y| = b. Throws std::invalid_argument if b > n.
std::vector<int> reconstruct_y(const V2Tables& t, int b);
std::vector<int> reconstruct_y(const Instance& inst, int b, int root = 0);

// True iff summing dyn over the components of T - Y reproduces value
// (each component re-solved with budget 0).
bool certify_vacc2(const Instance& inst, std::span<const int> y,
                   ExtValue value);

namespace detail {

// Final layer M(k, p_in, p_=, c) of the three-way child knapsack at u:
// each child is deleted (contributes y_in, counts toward p_in), kept with
// y0 = y1 (contributes y1, counts toward p_=), or kept with y0 > y1
// (contributes y1). Indexed [p_in][p_=][c]; p_in is capped by the budget
// since a deleted child costs at least one unit. Exposed for the
// enumeration tests.
std::vector<std::vector<std::vector<ExtValue>>> v2_selection_knapsack(
    const V2Tables& t, int u, int budget_cap);

}  // namespace detail

}  // namespace vacctree
