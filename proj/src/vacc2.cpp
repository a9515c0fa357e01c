#include "vacctree/vacc2.hpp"

#include <algorithm>
#include <stdexcept>

#include "vacctree/vacc1.hpp"  // detail::delta_threshold

namespace vacctree {

namespace detail {

std::vector<std::vector<std::vector<ExtValue>>> v2_selection_knapsack(
    const V2Tables& t, int u, int budget_cap) {
  const auto& children = t.tree.children[static_cast<size_t>(u)];
  const int k = static_cast<int>(children.size());
  const int cap = budget_cap;
  const int pin_cap = std::min(k, cap);  // a deleted child costs >= 1

  // layer[p_in][q][c]; exact partitions, so only (0,0,0) is feasible before
  // the first child.
  auto make = [&] {
    return std::vector<std::vector<std::vector<ExtValue>>>(
        static_cast<size_t>(pin_cap + 1),
        std::vector<std::vector<ExtValue>>(
            static_cast<size_t>(k + 1),
            std::vector<ExtValue>(static_cast<size_t>(cap + 1))));
  };
  auto layer = make();
  auto next = make();
  layer[0][0][0] = ExtValue(0);

  for (int p = 0; p < k; ++p) {
    const int v = children[static_cast<size_t>(p)];
    const auto& row_in = t.y_in[static_cast<size_t>(v)];
    const auto& row0 = t.y0[static_cast<size_t>(v)];
    const auto& row1 = t.y1[static_cast<size_t>(v)];
    const int kept_max = static_cast<int>(row0.size()) - 1;
    const int del_max = static_cast<int>(row_in.size()) - 1;
    for (auto& plane : next)
      for (auto& row : plane)
        std::fill(row.begin(), row.end(), ExtValue::neg_inf());
    for (int pin = 0; pin <= std::min(p + 1, pin_cap); ++pin) {
      for (int q = 0; q <= p + 1; ++q) {
        for (int c = 0; c <= cap; ++c) {
          ExtValue best;
          // Kept child: contributes y1, and y0 == y1 advances q.
          for (int bp = 0; bp <= std::min(c, kept_max); ++bp) {
            const bool eq = row0[static_cast<size_t>(bp)] ==
                            row1[static_cast<size_t>(bp)];
            const int q_prev = q - (eq ? 1 : 0);
            if (q_prev < 0) continue;
            best = std::max(
                best, layer[static_cast<size_t>(pin)]
                           [static_cast<size_t>(q_prev)]
                           [static_cast<size_t>(c - bp)] +
                          row1[static_cast<size_t>(bp)]);
          }
          // Deleted child: contributes y_in, advances p_in, costs >= 1.
          if (pin >= 1)
            for (int bp = 1; bp <= std::min(c, del_max); ++bp)
              best = std::max(
                  best, layer[static_cast<size_t>(pin - 1)]
                             [static_cast<size_t>(q)]
                             [static_cast<size_t>(c - bp)] +
                            row_in[static_cast<size_t>(bp)]);
          next[static_cast<size_t>(pin)][static_cast<size_t>(q)]
              [static_cast<size_t>(c)] = best;
        }
      }
    }
    std::swap(layer, next);
  }
  return layer;
}

}  // namespace detail

namespace {

// Exact knapsack over the children's vacc2 profiles max(y_in, y0); feeds the
// y_in row, where u itself is deleted and the children split b - 1.
std::vector<ExtValue> profile_knapsack(const V2Tables& t,
                                       std::span<const int> children,
                                       int cap) {
  std::vector<ExtValue> w(static_cast<size_t>(cap + 1));
  w[0] = ExtValue(0);
  std::vector<ExtValue> next(w.size());
  for (int v : children) {
    const int vmax =
        static_cast<int>(t.y_in[static_cast<size_t>(v)].size()) - 1;
    for (int c = 0; c <= cap; ++c) {
      ExtValue best;
      for (int bp = 0; bp <= std::min(c, vmax); ++bp)
        best = std::max(best, w[static_cast<size_t>(c - bp)] +
                                  t.value_at(v, bp));
      next[static_cast<size_t>(c)] = best;
    }
    std::swap(w, next);
  }
  return w;
}

void fill_leaf_rows(V2Tables& t, int u) {
  const int cap_in = std::min(t.bmax, 1);
  auto& row_in = t.y_in[static_cast<size_t>(u)];
  row_in.assign(static_cast<size_t>(cap_in + 1), ExtValue::neg_inf());
  if (cap_in >= 1) row_in[1] = ExtValue(0);  // deleted leaf leaves nothing

  const ThresholdValue tv = t.tau[static_cast<size_t>(u)];
  t.y0[static_cast<size_t>(u)] = {ExtValue(tv.at_most(0) ? 0 : 1)};
  t.y1[static_cast<size_t>(u)] = {ExtValue(tv.at_most(1) ? 0 : 1)};
}

void combine_vertex(V2Tables& t, int u) {
  const auto& children = t.tree.children[static_cast<size_t>(u)];
  const int k = static_cast<int>(children.size());
  const int sub = t.tree.subtree_size[static_cast<size_t>(u)];

  const int cap_in = std::min(t.bmax, sub);
  auto& row_in = t.y_in[static_cast<size_t>(u)];
  row_in.assign(static_cast<size_t>(cap_in + 1), ExtValue::neg_inf());
  if (cap_in >= 1) {
    const auto w = profile_knapsack(t, children, cap_in - 1);
    for (int b = 1; b <= cap_in; ++b)
      row_in[static_cast<size_t>(b)] = w[static_cast<size_t>(b - 1)];
  }

  const int cap = std::min(t.bmax, sub - 1);
  const auto m = detail::v2_selection_knapsack(t, u, cap);
  const int pin_cap = std::min(k, cap);
  const int t0 = detail::delta_threshold(t.tau[static_cast<size_t>(u)], 0, k);
  const int t1 = detail::delta_threshold(t.tau[static_cast<size_t>(u)], 1, k);

  auto& row0 = t.y0[static_cast<size_t>(u)];
  auto& row1 = t.y1[static_cast<size_t>(u)];
  row0.assign(static_cast<size_t>(cap + 1), ExtValue::neg_inf());
  row1.assign(row0.size(), ExtValue::neg_inf());
  for (int b = 0; b <= cap; ++b) {
    ExtValue z0, z1;
    for (int pin = 0; pin <= pin_cap; ++pin) {
      for (int q = 0; q <= k; ++q) {
        const ExtValue mq = m[static_cast<size_t>(pin)][static_cast<size_t>(q)]
                             [static_cast<size_t>(b)];
        z0 = std::max(z0, q < t0 ? ExtValue(1) + mq : mq);
        z1 = std::max(z1, q < t1 ? ExtValue(1) + mq : mq);
      }
    }
    row0[static_cast<size_t>(b)] = z0;
    row1[static_cast<size_t>(b)] = z1;
  }
}

// Suffix knapsacks for the witness descent.
std::vector<std::vector<ExtValue>> suffix_profile(
    const V2Tables& t, std::span<const int> children, int cap) {
  const int k = static_cast<int>(children.size());
  std::vector<std::vector<ExtValue>> ws(
      static_cast<size_t>(k + 1),
      std::vector<ExtValue>(static_cast<size_t>(cap + 1)));
  ws[static_cast<size_t>(k)][0] = ExtValue(0);
  for (int p = k - 1; p >= 0; --p) {
    const int v = children[static_cast<size_t>(p)];
    const int vmax =
        static_cast<int>(t.y_in[static_cast<size_t>(v)].size()) - 1;
    for (int c = 0; c <= cap; ++c) {
      ExtValue best;
      for (int bp = 0; bp <= std::min(c, vmax); ++bp)
        best = std::max(best, t.value_at(v, bp) +
                                  ws[static_cast<size_t>(p + 1)]
                                    [static_cast<size_t>(c - bp)]);
      ws[static_cast<size_t>(p)][static_cast<size_t>(c)] = best;
    }
  }
  return ws;
}

// ms[p][p_in][q][c] over children p..k-1.
using SuffixSelection = std::vector<
    std::vector<std::vector<std::vector<ExtValue>>>>;

SuffixSelection suffix_selection(const V2Tables& t,
                                 std::span<const int> children, int cap) {
  const int k = static_cast<int>(children.size());
  const int pin_cap = std::min(k, cap);
  SuffixSelection ms(
      static_cast<size_t>(k + 1),
      std::vector<std::vector<std::vector<ExtValue>>>(
          static_cast<size_t>(pin_cap + 1),
          std::vector<std::vector<ExtValue>>(
              static_cast<size_t>(k + 1),
              std::vector<ExtValue>(static_cast<size_t>(cap + 1)))));
  ms[static_cast<size_t>(k)][0][0][0] = ExtValue(0);
  for (int p = k - 1; p >= 0; --p) {
    const int v = children[static_cast<size_t>(p)];
    const auto& row_in = t.y_in[static_cast<size_t>(v)];
    const auto& row0 = t.y0[static_cast<size_t>(v)];
    const auto& row1 = t.y1[static_cast<size_t>(v)];
    const int kept_max = static_cast<int>(row0.size()) - 1;
    const int del_max = static_cast<int>(row_in.size()) - 1;
    for (int pin = 0; pin <= pin_cap; ++pin) {
      for (int q = 0; q <= k - p; ++q) {
        for (int c = 0; c <= cap; ++c) {
          ExtValue best;
          for (int bp = 0; bp <= std::min(c, kept_max); ++bp) {
            const bool eq = row0[static_cast<size_t>(bp)] ==
                            row1[static_cast<size_t>(bp)];
            const int q_next = q - (eq ? 1 : 0);
            if (q_next < 0) continue;
            best = std::max(
                best, row1[static_cast<size_t>(bp)] +
                          ms[static_cast<size_t>(p + 1)]
                            [static_cast<size_t>(pin)]
                            [static_cast<size_t>(q_next)]
                            [static_cast<size_t>(c - bp)]);
          }
          if (pin >= 1)
            for (int bp = 1; bp <= std::min(c, del_max); ++bp)
              best = std::max(
                  best, row_in[static_cast<size_t>(bp)] +
                            ms[static_cast<size_t>(p + 1)]
                              [static_cast<size_t>(pin - 1)]
                              [static_cast<size_t>(q)]
                              [static_cast<size_t>(c - bp)]);
          ms[static_cast<size_t>(p)][static_cast<size_t>(pin)]
            [static_cast<size_t>(q)][static_cast<size_t>(c)] = best;
        }
      }
    }
  }
  return ms;
}

}  // namespace

V2Tables build_v2_tables(const Instance& inst, int bmax, int root) {
  validate_instance(inst);
  V2Tables t;
  t.tree = root_at(inst, root);
  t.tau = inst.tau;
  t.bmax = std::max(bmax, 0);
  t.y_in.resize(static_cast<size_t>(inst.n));
  t.y0.resize(static_cast<size_t>(inst.n));
  t.y1.resize(static_cast<size_t>(inst.n));
  for (int u : t.tree.post_order) {
    if (t.tree.children[static_cast<size_t>(u)].empty())
      fill_leaf_rows(t, u);
    else
      combine_vertex(t, u);
  }
  return t;
}

ExtValue solve_vacc2(const Instance& inst, int b, int root) {
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  if (b > inst.n) return ExtValue::neg_inf();
  const V2Tables t = build_v2_tables(inst, b, root);
  return t.value_at(t.tree.root, b);
}

std::vector<int> reconstruct_y(const V2Tables& t, int b) {
  const int n = static_cast<int>(t.tree.parent.size());
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  if (b > n)
    throw std::invalid_argument("infeasible: budget " + std::to_string(b) +
                                " exceeds vertex count " + std::to_string(n));
  if (b > t.bmax)
    throw std::invalid_argument("tables were built for budgets up to " +
                                std::to_string(t.bmax));

  enum class Mode { kDeleted, kKept };
  std::vector<int> y;
  std::vector<std::tuple<int, int, Mode>> stack;
  stack.emplace_back(t.tree.root,
                     b, t.yin(t.tree.root, b) >= t.y(0, t.tree.root, b)
                            ? Mode::kDeleted
                            : Mode::kKept);
  while (!stack.empty()) {
    const auto [u, bu, mode] = stack.back();
    stack.pop_back();
    const auto& children = t.tree.children[static_cast<size_t>(u)];
    const int k = static_cast<int>(children.size());

    if (mode == Mode::kDeleted) {
      y.push_back(u);
      if (k == 0) continue;  // bu == 1
      const auto ws = suffix_profile(t, children, bu - 1);
      int c = bu - 1;
      for (int p = 0; p < k; ++p) {
        const int v = children[static_cast<size_t>(p)];
        const int vmax =
            static_cast<int>(t.y_in[static_cast<size_t>(v)].size()) - 1;
        for (int bp = 0; bp <= std::min(c, vmax); ++bp) {
          if (t.value_at(v, bp) +
                  ws[static_cast<size_t>(p + 1)][static_cast<size_t>(c - bp)] ==
              ws[static_cast<size_t>(p)][static_cast<size_t>(c)]) {
            stack.emplace_back(v, bp,
                               t.yin(v, bp) > t.y(0, v, bp) ? Mode::kDeleted
                                                            : Mode::kKept);
            c -= bp;
            break;
          }
        }
      }
      continue;
    }

    if (k == 0) continue;  // kept leaf, bu == 0
    // As in the immunization descent, the set must witness y0 and y1 at
    // once: extract along the j = 1 recurrence when the cells coincide and
    // along j = 0 otherwise.
    const int j = t.y(0, u, bu) == t.y(1, u, bu) ? 1 : 0;
    const ExtValue target = t.y(j, u, bu);
    const auto ms = suffix_selection(t, children, bu);
    const int pin_cap = std::min(k, bu);
    const int tj =
        detail::delta_threshold(t.tau[static_cast<size_t>(u)], j, k);
    int pin_star = -1, q_star = -1;
    for (int pin = 0; pin <= pin_cap && pin_star < 0; ++pin) {
      for (int q = 0; q <= k; ++q) {
        const ExtValue mq = ms[0][static_cast<size_t>(pin)]
                              [static_cast<size_t>(q)][static_cast<size_t>(bu)];
        if ((q < tj ? ExtValue(1) + mq : mq) == target) {
          pin_star = pin;
          q_star = q;
          break;
        }
      }
    }
    int pin = pin_star, q = q_star, c = bu;
    for (int p = 0; p < k; ++p) {
      const int v = children[static_cast<size_t>(p)];
      const auto& row_in = t.y_in[static_cast<size_t>(v)];
      const auto& row0 = t.y0[static_cast<size_t>(v)];
      const auto& row1 = t.y1[static_cast<size_t>(v)];
      const int kept_max = static_cast<int>(row0.size()) - 1;
      const int del_max = static_cast<int>(row_in.size()) - 1;
      const auto rest = [&](int pin2, int q2, int c2) -> ExtValue {
        return ms[static_cast<size_t>(p + 1)][static_cast<size_t>(pin2)]
                 [static_cast<size_t>(q2)][static_cast<size_t>(c2)];
      };
      const ExtValue want =
          ms[static_cast<size_t>(p)][static_cast<size_t>(pin)]
            [static_cast<size_t>(q)][static_cast<size_t>(c)];
      bool taken = false;
      for (int bp = 0; bp <= c && !taken; ++bp) {
        if (bp <= kept_max) {
          const bool eq = row0[static_cast<size_t>(bp)] ==
                          row1[static_cast<size_t>(bp)];
          const int q_next = q - (eq ? 1 : 0);
          if (q_next >= 0 &&
              row1[static_cast<size_t>(bp)] + rest(pin, q_next, c - bp) ==
                  want) {
            stack.emplace_back(v, bp, Mode::kKept);
            q = q_next;
            c -= bp;
            taken = true;
            break;
          }
        }
        if (bp >= 1 && bp <= del_max && pin >= 1 &&
            row_in[static_cast<size_t>(bp)] + rest(pin - 1, q, c - bp) ==
                want) {
          stack.emplace_back(v, bp, Mode::kDeleted);
          --pin;
          c -= bp;
          taken = true;
          break;
        }
      }
    }
  }
  std::sort(y.begin(), y.end());
  return y;
}

std::vector<int> reconstruct_y(const Instance& inst, int b, int root) {
  if (b > inst.n)
    throw std::invalid_argument("infeasible: budget " + std::to_string(b) +
                                " exceeds vertex count " +
                                std::to_string(inst.n));
  return reconstruct_y(build_v2_tables(inst, b, root), b);
}

bool certify_vacc2(const Instance& inst, std::span<const int> y,
                   ExtValue value) {
  ExtValue total(0);
  for (const auto& comp : delete_vertices(inst, y))
    total = total + solve_vacc2(comp.instance, 0);
  return total == value;
}

}  // namespace vacctree
