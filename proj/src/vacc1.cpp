#include "vacctree/vacc1.hpp"

#include <algorithm>
#include <stdexcept>

namespace vacctree {

namespace detail {

int delta_threshold(ThresholdValue tau_u, int j, int k) {
  if (tau_u.is_infinite()) return k + 1;
  const std::int64_t t = tau_u.finite_value() - j;
  if (t < 0) return 0;
  if (t > k + 1) return k + 1;  // unreachable counts behave like +inf
  return static_cast<int>(t);
}

std::vector<std::vector<ExtValue>> v1_equality_knapsack(const V1Tables& t,
                                                        int u,
                                                        int budget_cap) {
  const auto& children = t.tree.children[static_cast<size_t>(u)];
  const int k = static_cast<int>(children.size());
  const int cap = budget_cap;
  // layer[q][c]: best sum of x1 cells over the children seen so far using
  // exactly budget c, with q of them having x0 == x1. Exact partitions:
  // only (q,c) = (0,0) is feasible before the first child.
  std::vector<std::vector<ExtValue>> layer(
      static_cast<size_t>(k + 1),
      std::vector<ExtValue>(static_cast<size_t>(cap + 1)));
  layer[0][0] = ExtValue(0);
  std::vector<std::vector<ExtValue>> next(layer.size(),
                                          layer[0]);  // -inf rows
  for (int p = 0; p < k; ++p) {
    const int v = children[static_cast<size_t>(p)];
    const auto& row0 = t.x0[static_cast<size_t>(v)];
    const auto& row1 = t.x1[static_cast<size_t>(v)];
    const int vmax = static_cast<int>(row1.size()) - 1;
    for (auto& r : next) std::fill(r.begin(), r.end(), ExtValue::neg_inf());
    for (int q = 0; q <= p + 1; ++q) {
      for (int c = 0; c <= cap; ++c) {
        ExtValue best;
        for (int bp = 0; bp <= std::min(c, vmax); ++bp) {
          const bool eq = row0[static_cast<size_t>(bp)] ==
                          row1[static_cast<size_t>(bp)];
          const int q_prev = q - (eq ? 1 : 0);
          if (q_prev < 0) continue;
          best = std::max(best, layer[static_cast<size_t>(q_prev)]
                                     [static_cast<size_t>(c - bp)] +
                                    row1[static_cast<size_t>(bp)]);
        }
        next[static_cast<size_t>(q)][static_cast<size_t>(c)] = best;
      }
    }
    std::swap(layer, next);
  }
  return layer;
}

}  // namespace detail

namespace {

// Exact-budget knapsack on the children's x1 rows: w[c] is the best sum of
// x1(v_i, b_i) with the b_i summing to exactly c.
std::vector<ExtValue> plain_knapsack(const V1Tables& t,
                                     std::span<const int> children, int cap) {
  std::vector<ExtValue> w(static_cast<size_t>(cap + 1));
  w[0] = ExtValue(0);
  std::vector<ExtValue> next(w.size());
  for (int v : children) {
    const auto& row1 = t.x1[static_cast<size_t>(v)];
    const int vmax = static_cast<int>(row1.size()) - 1;
    for (int c = 0; c <= cap; ++c) {
      ExtValue best;
      for (int bp = 0; bp <= std::min(c, vmax); ++bp)
        best = std::max(best, w[static_cast<size_t>(c - bp)] +
                                  row1[static_cast<size_t>(bp)]);
      next[static_cast<size_t>(c)] = best;
    }
    std::swap(w, next);
  }
  return w;
}

void fill_leaf_rows(V1Tables& t, int u) {
  const int cap = std::min(t.bmax, 1);
  auto& row0 = t.x0[static_cast<size_t>(u)];
  auto& row1 = t.x1[static_cast<size_t>(u)];
  row0.assign(static_cast<size_t>(cap + 1), ExtValue::neg_inf());
  row1.assign(row0.size(), ExtValue::neg_inf());
  const ThresholdValue tv = t.tau[static_cast<size_t>(u)];
  row0[0] = ExtValue(tv.at_most(0) ? 0 : 1);
  row1[0] = ExtValue(tv.at_most(1) ? 0 : 1);
  if (cap >= 1) row0[1] = row1[1] = ExtValue(1);
}

void combine_vertex(V1Tables& t, int u) {
  const auto& children = t.tree.children[static_cast<size_t>(u)];
  const int k = static_cast<int>(children.size());
  const int cap =
      std::min(t.bmax, t.tree.subtree_size[static_cast<size_t>(u)]);

  const std::vector<ExtValue> w = plain_knapsack(t, children, cap);
  const auto m = detail::v1_equality_knapsack(t, u, cap);
  const int t0 = detail::delta_threshold(t.tau[static_cast<size_t>(u)], 0, k);
  const int t1 = detail::delta_threshold(t.tau[static_cast<size_t>(u)], 1, k);

  auto& row0 = t.x0[static_cast<size_t>(u)];
  auto& row1 = t.x1[static_cast<size_t>(u)];
  row0.assign(static_cast<size_t>(cap + 1), ExtValue::neg_inf());
  row1.assign(row0.size(), ExtValue::neg_inf());
  for (int b = 0; b <= cap; ++b) {
    // z: u itself is immunized (and therefore seeded), children share b-1.
    const ExtValue z =
        b >= 1 ? ExtValue(1) + w[static_cast<size_t>(b - 1)] : ExtValue();
    ExtValue z0, z1;
    for (int q = 0; q <= k; ++q) {
      const ExtValue mq = m[static_cast<size_t>(q)][static_cast<size_t>(b)];
      z0 = std::max(z0, q < t0 ? ExtValue(1) + mq : mq);
      z1 = std::max(z1, q < t1 ? ExtValue(1) + mq : mq);
    }
    row0[static_cast<size_t>(b)] = std::max(z, z0);
    row1[static_cast<size_t>(b)] = std::max(z, z1);
  }
}

// Suffix knapsacks used by the witness descent: ws[p][c] covers children
// p..k-1 of the plain knapsack, ms[p][q][c] the equality-counting one.
std::vector<std::vector<ExtValue>> suffix_plain(const V1Tables& t,
                                                std::span<const int> children,
                                                int cap) {
  const int k = static_cast<int>(children.size());
  std::vector<std::vector<ExtValue>> ws(
      static_cast<size_t>(k + 1),
      std::vector<ExtValue>(static_cast<size_t>(cap + 1)));
  ws[static_cast<size_t>(k)][0] = ExtValue(0);
  for (int p = k - 1; p >= 0; --p) {
    const auto& row1 = t.x1[static_cast<size_t>(children[static_cast<size_t>(p)])];
    const int vmax = static_cast<int>(row1.size()) - 1;
    for (int c = 0; c <= cap; ++c) {
      ExtValue best;
      for (int bp = 0; bp <= std::min(c, vmax); ++bp)
        best = std::max(best,
                        row1[static_cast<size_t>(bp)] +
                            ws[static_cast<size_t>(p + 1)]
                              [static_cast<size_t>(c - bp)]);
      ws[static_cast<size_t>(p)][static_cast<size_t>(c)] = best;
    }
  }
  return ws;
}

std::vector<std::vector<std::vector<ExtValue>>> suffix_equality(
    const V1Tables& t, std::span<const int> children, int cap) {
  const int k = static_cast<int>(children.size());
  std::vector<std::vector<std::vector<ExtValue>>> ms(
      static_cast<size_t>(k + 1),
      std::vector<std::vector<ExtValue>>(
          static_cast<size_t>(k + 1),
          std::vector<ExtValue>(static_cast<size_t>(cap + 1))));
  ms[static_cast<size_t>(k)][0][0] = ExtValue(0);
  for (int p = k - 1; p >= 0; --p) {
    const int v = children[static_cast<size_t>(p)];
    const auto& row0 = t.x0[static_cast<size_t>(v)];
    const auto& row1 = t.x1[static_cast<size_t>(v)];
    const int vmax = static_cast<int>(row1.size()) - 1;
    for (int q = 0; q <= k - p; ++q) {
      for (int c = 0; c <= cap; ++c) {
        ExtValue best;
        for (int bp = 0; bp <= std::min(c, vmax); ++bp) {
          const bool eq = row0[static_cast<size_t>(bp)] ==
                          row1[static_cast<size_t>(bp)];
          const int q_next = q - (eq ? 1 : 0);
          if (q_next < 0) continue;
          best = std::max(best,
                          row1[static_cast<size_t>(bp)] +
                              ms[static_cast<size_t>(p + 1)]
                                [static_cast<size_t>(q_next)]
                                [static_cast<size_t>(c - bp)]);
        }
        ms[static_cast<size_t>(p)][static_cast<size_t>(q)]
          [static_cast<size_t>(c)] = best;
      }
    }
  }
  return ms;
}

}  // namespace

V1Tables build_v1_tables(const Instance& inst, int bmax, int root) {
  validate_instance(inst);
  V1Tables t;
  t.tree = root_at(inst, root);
  t.tau = inst.tau;
  t.bmax = std::max(bmax, 0);
  t.x0.resize(static_cast<size_t>(inst.n));
  t.x1.resize(static_cast<size_t>(inst.n));
  for (int u : t.tree.post_order) {
    if (t.tree.children[static_cast<size_t>(u)].empty())
      fill_leaf_rows(t, u);
    else
      combine_vertex(t, u);
  }
  return t;
}

ExtValue solve_vacc1(const Instance& inst, int b, int root) {
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  if (b > inst.n) return ExtValue::neg_inf();
  const V1Tables t = build_v1_tables(inst, b, root);
  return t.x(0, t.tree.root, b);
}

std::vector<int> reconstruct_x(const V1Tables& t, int b) {
  const int n = static_cast<int>(t.tree.parent.size());
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  if (b > n)
    throw std::invalid_argument("infeasible: budget " + std::to_string(b) +
                                " exceeds vertex count " + std::to_string(n));
  if (b > t.bmax)
    throw std::invalid_argument("tables were built for budgets up to " +
                                std::to_string(t.bmax));

  std::vector<int> x;
  std::vector<std::pair<int, int>> stack{{t.tree.root, b}};
  while (!stack.empty()) {
    const auto [u, bu] = stack.back();
    stack.pop_back();
    const auto& children = t.tree.children[static_cast<size_t>(u)];
    const int k = static_cast<int>(children.size());
    if (k == 0) {
      if (bu == 1) x.push_back(u);
      continue;
    }
    // The parent's knapsack sums x1 cells, so the set produced here must
    // witness x0 and x1 at once. When the cells are equal, extract along
    // j = 1: a helped-optimal set also attains the unhelped value then
    // (immunization only raises thresholds, and the two optima coincide).
    // When x0 > x1, every maximizer of the j = 0 recurrence is shared.
    const int j = t.x(0, u, bu) == t.x(1, u, bu) ? 1 : 0;
    const ExtValue target = t.x(j, u, bu);
    const auto ws = suffix_plain(t, children, bu);

    // Seed branch first: u immunized, children share bu - 1.
    if (bu >= 1 && ExtValue(1) + ws[0][static_cast<size_t>(bu - 1)] == target) {
      x.push_back(u);
      int c = bu - 1;
      for (int p = 0; p < k; ++p) {
        const int v = children[static_cast<size_t>(p)];
        const auto& row1 = t.x1[static_cast<size_t>(v)];
        const int vmax = static_cast<int>(row1.size()) - 1;
        for (int bp = 0; bp <= std::min(c, vmax); ++bp) {
          if (row1[static_cast<size_t>(bp)] +
                  ws[static_cast<size_t>(p + 1)][static_cast<size_t>(c - bp)] ==
              ws[static_cast<size_t>(p)][static_cast<size_t>(c)]) {
            stack.emplace_back(v, bp);
            c -= bp;
            break;
          }
        }
      }
      continue;
    }

    const auto ms = suffix_equality(t, children, bu);
    const int tj =
        detail::delta_threshold(t.tau[static_cast<size_t>(u)], j, k);
    int q_star = -1;
    for (int q = 0; q <= k; ++q) {
      const ExtValue mq = ms[0][static_cast<size_t>(q)][static_cast<size_t>(bu)];
      if ((q < tj ? ExtValue(1) + mq : mq) == target) {
        q_star = q;
        break;
      }
    }
    // One branch always matches: target was computed from these maxima.
    int q = q_star, c = bu;
    for (int p = 0; p < k; ++p) {
      const int v = children[static_cast<size_t>(p)];
      const auto& row0 = t.x0[static_cast<size_t>(v)];
      const auto& row1 = t.x1[static_cast<size_t>(v)];
      const int vmax = static_cast<int>(row1.size()) - 1;
      for (int bp = 0; bp <= std::min(c, vmax); ++bp) {
        const bool eq =
            row0[static_cast<size_t>(bp)] == row1[static_cast<size_t>(bp)];
        const int q_next = q - (eq ? 1 : 0);
        if (q_next < 0) continue;
        if (row1[static_cast<size_t>(bp)] +
                ms[static_cast<size_t>(p + 1)][static_cast<size_t>(q_next)]
                  [static_cast<size_t>(c - bp)] ==
            ms[static_cast<size_t>(p)][static_cast<size_t>(q)]
              [static_cast<size_t>(c)]) {
          stack.emplace_back(v, bp);
          q = q_next;
          c -= bp;
          break;
        }
      }
    }
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<int> reconstruct_x(const Instance& inst, int b, int root) {
  if (b > inst.n)
    throw std::invalid_argument("infeasible: budget " + std::to_string(b) +
                                " exceeds vertex count " +
                                std::to_string(inst.n));
  return reconstruct_x(build_v1_tables(inst, b, root), b);
}

std::vector<int> reconstruct_monopoly(const V1Tables& t) {
  std::vector<int> d;
  // (vertex, j): reconstruct a monopoly of (T_u, tau) for j = 0 and of
  // (T_u, tau^u) for j = 1, of size x_j(u, 0).
  std::vector<std::pair<int, int>> stack{{t.tree.root, 0}};
  while (!stack.empty()) {
    const auto [u, j] = stack.back();
    stack.pop_back();
    const ThresholdValue tv = t.tau[static_cast<size_t>(u)];
    const auto& children = t.tree.children[static_cast<size_t>(u)];
    const int k = static_cast<int>(children.size());
    if (k == 0) {
      if (!tv.at_most(j)) d.push_back(u);
      continue;
    }
    // With budget 0 every child gets 0, so only the delta term varies:
    // p_= < t_j forces u into the seed set; otherwise the first t_j children
    // with x0 = x1 finish without help and the rest get help through u.
    int p_eq = 0;
    for (int v : children)
      if (t.x(0, v, 0) == t.x(1, v, 0)) ++p_eq;
    const int tj = detail::delta_threshold(tv, j, k);
    if (p_eq >= tj) {
      int unhelped = tj;
      for (int v : children) {
        if (unhelped > 0 && t.x(0, v, 0) == t.x(1, v, 0)) {
          stack.emplace_back(v, 0);
          --unhelped;
        } else {
          stack.emplace_back(v, 1);
        }
      }
    } else {
      d.push_back(u);
      for (int v : children) stack.emplace_back(v, 1);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> reconstruct_monopoly(const Instance& inst, int root) {
  return reconstruct_monopoly(build_v1_tables(inst, 0, root));
}

bool certify_vacc1(const Instance& inst, std::span<const int> x,
                   ExtValue value, int root) {
  Instance immunized{inst.n, inst.edges, immunize(inst.tau, x), std::nullopt};
  return solve_vacc1(immunized, 0, root) == value;
}

}  // namespace vacctree
