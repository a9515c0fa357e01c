#include <doctest.h>

#include <algorithm>
#include <functional>

#include "test_util.hpp"
#include "vacctree/percolation.hpp"
#include "vacctree/vacc1.hpp"
#include "vacctree/vacc2.hpp"

using namespace vacctree;

namespace {

// Reference for the selection knapsack: enumerate every ordered partition
// and every deleted/kept vector, bucketing by (deleted count, kept-equal
// count). Deleted children with zero budget read y_in = -inf and lose.
std::vector<std::vector<std::vector<ExtValue>>> enumerate_selection_knapsack(
    const V2Tables& t, int u, int cap) {
  const auto& children = t.tree.children[static_cast<size_t>(u)];
  const int k = static_cast<int>(children.size());
  std::vector<std::vector<std::vector<ExtValue>>> m(
      static_cast<size_t>(k + 1),
      std::vector<std::vector<ExtValue>>(
          static_cast<size_t>(k + 1),
          std::vector<ExtValue>(static_cast<size_t>(cap + 1))));
  std::vector<int> parts(static_cast<size_t>(k), 0);
  for (int c = 0; c <= cap; ++c) {
    std::function<void(int, int)> recurse = [&](int p, int left) {
      if (p == k) {
        if (left != 0) return;
        // all 2^k deleted/kept selections with b >= c elementwise
        for (int mask = 0; mask < (1 << k); ++mask) {
          bool ok = true;
          for (int i = 0; i < k && ok; ++i)
            if ((mask >> i & 1) && parts[static_cast<size_t>(i)] < 1)
              ok = false;
          if (!ok) continue;
          int pin = 0, q = 0;
          ExtValue sum(0);
          for (int i = 0; i < k; ++i) {
            const int v = children[static_cast<size_t>(i)];
            const int bi = parts[static_cast<size_t>(i)];
            if (mask >> i & 1) {
              ++pin;
              sum = sum + t.yin(v, bi);
            } else {
              if (t.y(0, v, bi) == t.y(1, v, bi)) ++q;
              sum = sum + t.y(1, v, bi);
            }
          }
          auto& cell = m[static_cast<size_t>(pin)][static_cast<size_t>(q)]
                        [static_cast<size_t>(c)];
          cell = std::max(cell, sum);
        }
        return;
      }
      for (int bi = 0; bi <= left; ++bi) {
        parts[static_cast<size_t>(p)] = bi;
        recurse(p + 1, left - bi);
      }
    };
    recurse(0, c);
  }
  return m;
}

// max over |Y| = b with a fixed kept/deleted status for the root.
ExtValue oracle_y(const Instance& inst, int b, bool root_deleted,
                  const Threshold& tau) {
  ExtValue best;
  std::vector<int> all(static_cast<size_t>(inst.n));
  for (int u = 0; u < inst.n; ++u) all[static_cast<size_t>(u)] = u;
  std::function<void(size_t, std::vector<int>&)> recurse =
      [&](size_t from, std::vector<int>& y) {
        if (static_cast<int>(y.size()) == b) {
          const bool has_root =
              std::count(y.begin(), y.end(), 0) > 0;
          if (has_root != root_deleted) return;
          std::vector<char> gone(static_cast<size_t>(inst.n), 0);
          for (int u : y) gone[static_cast<size_t>(u)] = 1;
          int m = 0;
          std::vector<int> local(static_cast<size_t>(inst.n), -1);
          Threshold sub_tau;
          for (int u = 0; u < inst.n; ++u)
            if (!gone[static_cast<size_t>(u)]) {
              local[static_cast<size_t>(u)] = m++;
              sub_tau.push_back(tau[static_cast<size_t>(u)]);
            }
          std::vector<std::pair<int, int>> sub_edges;
          for (auto [a, bb] : inst.edges)
            if (!gone[static_cast<size_t>(a)] &&
                !gone[static_cast<size_t>(bb)])
              sub_edges.emplace_back(local[static_cast<size_t>(a)],
                                     local[static_cast<size_t>(bb)]);
          best = std::max(
              best, dyn_bruteforce(AdjacencyView::from_edges(m, sub_edges),
                                   sub_tau)
                        .value);
          return;
        }
        for (size_t i = from; i < all.size(); ++i) {
          y.push_back(all[i]);
          recurse(i + 1, y);
          y.pop_back();
        }
      };
  std::vector<int> y;
  recurse(0, y);
  return best;
}

}  // namespace

TEST_CASE("leaf rows") {
  const Instance leaf1 = testutil::path(1, ThresholdValue{1});
  const V2Tables t1 = build_v2_tables(leaf1, 3);
  CHECK(t1.yin(0, 0) == ExtValue::neg_inf());
  CHECK(t1.yin(0, 1) == ExtValue(0));
  CHECK(t1.yin(0, 2) == ExtValue::neg_inf());
  CHECK(t1.y(0, 0, 0) == ExtValue(1));
  CHECK(t1.y(1, 0, 0) == ExtValue(0));
  CHECK(t1.y(0, 0, 1) == ExtValue::neg_inf());

  const Instance leaf0 = testutil::path(1, ThresholdValue{0});
  const V2Tables t0 = build_v2_tables(leaf0, 1);
  CHECK(t0.y(0, 0, 0) == ExtValue(0));
  CHECK(t0.y(1, 0, 0) == ExtValue(0));

  const Instance leaf_inf = testutil::path(1, ThresholdValue::pos_inf());
  const V2Tables ti = build_v2_tables(leaf_inf, 1);
  CHECK(ti.y(0, 0, 0) == ExtValue(1));
  CHECK(ti.y(1, 0, 0) == ExtValue(1));
}

TEST_CASE("combining the deleted-root row") {
  // Star on 3 vertices rooted at the center.
  const Instance star3 = testutil::star(3, ThresholdValue{1});
  const V2Tables t = build_v2_tables(star3, 3);
  CHECK(t.yin(0, 1) == ExtValue(2));  // both leaves isolated, tau = 1
  CHECK(t.yin(0, 0) == ExtValue::neg_inf());

  // one child: deleting the whole subtree leaves nothing to seed
  const Instance p2 = testutil::path(2, ThresholdValue{1});
  const V2Tables t2 = build_v2_tables(p2, 2);
  CHECK(t2.yin(0, 2) == ExtValue(0));
}

TEST_CASE("combining the kept-root rows") {
  const Instance star5 = testutil::star(5, ThresholdValue{1});
  const V2Tables t = build_v2_tables(star5, 5);
  const AdjacencyView g = AdjacencyView::of(star5);

  CHECK(t.y(0, 0, 0) == ExtValue(1));
  CHECK(t.y(0, 0, 0) == dyn_bruteforce(g, star5.tau).value);
  // tau^u drops the center to 0: it activates by itself and the leaves
  // follow, so the helped value is 0.
  CHECK(t.y(1, 0, 0) == ExtValue(0));
  CHECK(t.y(1, 0, 0) == dyn_bruteforce(g, decrement_at(star5.tau, 0)).value);

  // budget 1 kept at the root: delete a leaf, seed the center
  CHECK(t.y(0, 0, 1) == ExtValue(1));
  CHECK(t.y(0, 0, 1) == oracle_y(star5, 1, false, star5.tau));
  const auto m = detail::v2_selection_knapsack(t, 0, 1);
  CHECK(m[1][0][1].is_finite());

  // keeping the root leaves at most n(T_u) - 1 deletable vertices
  CHECK(t.y(0, 0, 4) == ExtValue(1));
  CHECK(t.y(0, 0, 5) == ExtValue::neg_inf());
  CHECK(t.y(1, 0, 5) == ExtValue::neg_inf());
}

TEST_CASE("solve_vacc2 examples") {
  const Instance star5 = testutil::star(5, ThresholdValue{1});
  CHECK(solve_vacc2(star5, 1) == ExtValue(4));

  const Instance p3 = testutil::path(3, ThresholdValue{1});
  CHECK(solve_vacc2(p3, 1) == ExtValue(2));

  Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(1, 9);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    CHECK(solve_vacc2(inst, 0) ==
          dyn_bruteforce(AdjacencyView::of(inst), inst.tau).value);
    CHECK(solve_vacc2(inst, n) == ExtValue(0));  // delete everything
    CHECK(solve_vacc2(inst, n + 1) == ExtValue::neg_inf());
  }
}

TEST_CASE("vacc2 is not monotone in the budget") {
  const Instance star5 = testutil::star(5, ThresholdValue{1});
  CHECK(solve_vacc2(star5, 1) == ExtValue(4));
  CHECK(solve_vacc2(star5, 2) == ExtValue(3));
  CHECK(vacc2_bruteforce(star5, 1).value == ExtValue(4));
  CHECK(vacc2_bruteforce(star5, 2).value == ExtValue(3));
}

TEST_CASE("solve_vacc2 matches the oracle exhaustively on tiny trees") {
  Rng rng(107);
  for (int n = 1; n <= 5; ++n) {
    testutil::for_each_tree(n, [&](std::vector<std::pair<int, int>> edges) {
      Instance inst{n, std::move(edges), testutil::five_symbol_tau(n, rng),
                    std::nullopt};
      for (int b = 0; b <= n; ++b)
        CHECK(solve_vacc2(inst, b) == vacc2_bruteforce(inst, b).value);
    });
  }
}

TEST_CASE("solve_vacc2 matches the oracle on random trees") {
  Rng rng(109);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.range(1, 8);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    const int b = rng.range(0, n);
    CHECK(solve_vacc2(inst, b) == vacc2_bruteforce(inst, b).value);
  }
}

TEST_CASE("y0 dominates y1 cell-wise and rows follow the subtree bounds") {
  Rng rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.range(1, 14);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.25"), rng);
    const int bmax = rng.range(0, n);
    const V2Tables t = build_v2_tables(inst, bmax);
    for (int u = 0; u < n; ++u) {
      const int sub = t.tree.subtree_size[static_cast<size_t>(u)];
      CHECK(t.yin(u, 0) == ExtValue::neg_inf());
      for (int b = 1; b <= std::min(bmax, sub); ++b)
        CHECK(t.yin(u, b).is_finite());
      for (int b = 0; b <= std::min(bmax, sub - 1); ++b) {
        CHECK(t.y(0, u, b) >= t.y(1, u, b));
        CHECK(t.y(0, u, b).is_finite());
        CHECK(t.y(1, u, b).is_finite());
      }
      CHECK(t.y(0, u, sub) == ExtValue::neg_inf());
      CHECK(t.yin(u, sub + 1) == ExtValue::neg_inf());
    }
  }
}

TEST_CASE("solve_vacc2 is root invariant") {
  Rng rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.range(1, 11);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    const int b = rng.range(0, n);
    const ExtValue reference = solve_vacc2(inst, b, 0);
    for (int r = 1; r < n; ++r) CHECK(solve_vacc2(inst, b, r) == reference);
  }
}

TEST_CASE("reconstruct_y examples") {
  const Instance star5 = testutil::star(5, ThresholdValue{1});
  CHECK(reconstruct_y(star5, 1) == std::vector<int>{0});
  CHECK(reconstruct_y(star5, 0).empty());

  const Instance single = testutil::path(1, ThresholdValue{3});
  CHECK(reconstruct_y(single, 1) == std::vector<int>{0});

  CHECK_THROWS_AS(reconstruct_y(star5, 6), std::invalid_argument);
}

TEST_CASE("reconstructed deletion sets certify") {
  Rng rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.range(1, 20);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.25"), rng);
    const int b = rng.range(0, n);
    const V2Tables t = build_v2_tables(inst, b);
    const ExtValue value = t.value_at(t.tree.root, b);
    const std::vector<int> y = reconstruct_y(t, b);
    CHECK(static_cast<int>(y.size()) == b);
    CHECK(std::adjacent_find(y.begin(), y.end()) == y.end());
    CHECK(certify_vacc2(inst, y, value));
  }
}

TEST_CASE("kept-subtree witnesses realize the helped value too") {
  // Regression: deleting {3} here attains y0 at the kept child but not y1,
  // and the parent's knapsack summed y1. The descent must pick {2}, which
  // witnesses both, or the assembled set falls short by one.
  const Instance inst = parse_instance(
      R"({"n":6,"edges":[[1,0],[0,4],[3,2],[2,5],[4,5]],)"
      R"("tau":[1,0,0,0,"inf",2]})");
  const V2Tables t = build_v2_tables(inst, 1);
  CHECK(t.value_at(t.tree.root, 1) == ExtValue(2));
  const std::vector<int> y = reconstruct_y(t, 1);
  CHECK(y == std::vector<int>{2});
  CHECK(certify_vacc2(inst, y, ExtValue(2)));
}

TEST_CASE("selection knapsack matches explicit (b, c) enumeration") {
  Rng rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.range(2, 5);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.3"), rng);
    const int cap = std::min(3, n - 1);
    const V2Tables t = build_v2_tables(inst, cap);
    for (int u = 0; u < n; ++u) {
      const auto& children = t.tree.children[static_cast<size_t>(u)];
      if (children.empty()) continue;
      const int k = static_cast<int>(children.size());
      const int ucap = std::min(
          cap, t.tree.subtree_size[static_cast<size_t>(u)] - 1);
      const auto fast = detail::v2_selection_knapsack(t, u, ucap);
      const auto slow = enumerate_selection_knapsack(t, u, ucap);
      for (int pin = 0; pin <= k; ++pin)
        for (int q = 0; q <= k; ++q)
          for (int c = 0; c <= ucap; ++c) {
            const ExtValue fast_cell =
                pin < static_cast<int>(fast.size())
                    ? fast[static_cast<size_t>(pin)][static_cast<size_t>(q)]
                          [static_cast<size_t>(c)]
                    : ExtValue::neg_inf();
            CHECK(fast_cell ==
                  slow[static_cast<size_t>(pin)][static_cast<size_t>(q)]
                      [static_cast<size_t>(c)]);
          }
    }
  }
}
