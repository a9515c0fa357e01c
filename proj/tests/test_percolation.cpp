#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "vacctree/percolation.hpp"

using namespace vacctree;

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("hull examples") {
  const Instance p3 = testutil::path(3, ThresholdValue{1});
  const AdjacencyView g = AdjacencyView::of(p3);

  const std::vector<int> zero{0};
  CHECK(hull(g, p3.tau, zero) == std::vector<int>{0, 1, 2});
  CHECK(hull(g, p3.tau, {}).empty());

  const Threshold dip{ThresholdValue{2}, ThresholdValue{0}, ThresholdValue{2}};
  CHECK(hull(g, dip, {}) == std::vector<int>{1});

  const std::vector<int> bad{3};
  CHECK_THROWS_AS(hull(g, p3.tau, bad), ParseError);
}

TEST_CASE("is_dynamic_monopoly examples") {
  const Instance p3 = testutil::path(3, ThresholdValue{2});
  const AdjacencyView g = AdjacencyView::of(p3);
  const std::vector<int> ends{0, 2};
  const std::vector<int> mid{1};
  CHECK(is_dynamic_monopoly(g, p3.tau, ends));
  CHECK(!is_dynamic_monopoly(g, p3.tau, mid));
  CHECK(is_dynamic_monopoly(g, Threshold(3, ThresholdValue{0}), {}));
}

TEST_CASE("mandatory_vertices examples") {
  const Instance p3 = testutil::path(3, ThresholdValue{2});
  const AdjacencyView g = AdjacencyView::of(p3);
  CHECK(mandatory_vertices(g, p3.tau) == std::vector<int>{0, 2});

  const Threshold immune_mid{ThresholdValue{1}, ThresholdValue::pos_inf(),
                             ThresholdValue{1}};
  CHECK(mandatory_vertices(g, immune_mid) == std::vector<int>{1});
  CHECK(mandatory_vertices(g, Threshold(3, ThresholdValue{1})).empty());
}

TEST_CASE("dyn_bruteforce examples") {
  const Instance p3 = testutil::path(3, ThresholdValue{2});
  const AdjacencyView g = AdjacencyView::of(p3);

  const DynResult two = dyn_bruteforce(g, p3.tau);
  CHECK(two.value == ExtValue(2));
  CHECK(two.witness == std::vector<int>{0, 2});

  const DynResult zero =
      dyn_bruteforce(g, Threshold(3, ThresholdValue{0}));
  CHECK(zero.value == ExtValue(0));
  CHECK(zero.witness.empty());

  const Threshold immune_mid{ThresholdValue{1}, ThresholdValue::pos_inf(),
                             ThresholdValue{1}};
  const DynResult one = dyn_bruteforce(g, immune_mid);
  CHECK(one.value == ExtValue(1));
  CHECK(one.witness == std::vector<int>{1});
}

TEST_CASE("dyn_bruteforce size guard") {
  Rng rng(3);
  const Instance big = random_instance(
      21, ThresholdProfile::parse("const:1"), rng);
  const AdjacencyView g = AdjacencyView::of(big);
  CHECK_THROWS_AS(dyn_bruteforce(g, big.tau), SizeGuardError);
  CHECK(dyn_bruteforce(g, big.tau, 21).value == ExtValue(1));
}

TEST_CASE("vacc1_bruteforce examples") {
  const Instance p3_tau2 = testutil::path(3, ThresholdValue{2});
  const VaccResult best = vacc1_bruteforce(p3_tau2, 1);
  CHECK(best.value == ExtValue(3));
  CHECK(best.witness == std::vector<int>{1});

  const Instance p3_tau1 = testutil::path(3, ThresholdValue{1});
  CHECK(vacc1_bruteforce(p3_tau1, 0).value == ExtValue(1));
  CHECK(vacc1_bruteforce(p3_tau1, 4).value == ExtValue::neg_inf());
  CHECK(vacc1_bruteforce(p3_tau1, 4).witness.empty());
}

TEST_CASE("vacc2_bruteforce examples") {
  const Instance star5 = testutil::star(5, ThresholdValue{1});
  const VaccResult best = vacc2_bruteforce(star5, 1);
  CHECK(best.value == ExtValue(4));
  CHECK(best.witness == std::vector<int>{0});

  const Instance p3 = testutil::path(3, ThresholdValue{1});
  const VaccResult mid = vacc2_bruteforce(p3, 1);
  CHECK(mid.value == ExtValue(2));
  CHECK(mid.witness == std::vector<int>{1});

  const Instance single = testutil::path(1, ThresholdValue{7});
  const VaccResult gone = vacc2_bruteforce(single, 1);
  CHECK(gone.value == ExtValue(0));
  CHECK(gone.witness == std::vector<int>{0});
}

TEST_CASE("hull is extensive, monotone, and idempotent") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.range(1, 14);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    const AdjacencyView g = AdjacencyView::of(inst);
    std::vector<int> seeds;
    for (int u = 0; u < n; ++u)
      if (rng.chance(0.25)) seeds.push_back(u);

    const std::vector<int> h = hull(g, inst.tau, seeds);
    CHECK(subset_of(seeds, h));
    CHECK(hull(g, inst.tau, h) == h);

    std::vector<int> more = seeds;
    const int extra = rng.below(n);
    if (!std::count(more.begin(), more.end(), extra)) more.push_back(extra);
    CHECK(subset_of(h, hull(g, inst.tau, more)));
  }
}

TEST_CASE("raising thresholds shrinks hulls and raises dyn") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(1, 10);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    const AdjacencyView g = AdjacencyView::of(inst);

    Threshold higher = inst.tau;
    for (auto& t : higher)
      if (rng.chance(0.4))
        t = rng.chance(0.2) ? ThresholdValue::pos_inf()
                            : (t.is_infinite() ? t
                                               : ThresholdValue{
                                                     t.finite_value() + 1});
    std::vector<int> seeds;
    for (int u = 0; u < n; ++u)
      if (rng.chance(0.3)) seeds.push_back(u);

    CHECK(subset_of(hull(g, higher, seeds), hull(g, inst.tau, seeds)));
    CHECK(dyn_bruteforce(g, higher).value >=
          dyn_bruteforce(g, inst.tau).value);
  }
}

TEST_CASE("dyn witnesses are monopolies containing the mandatory set") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(1, 11);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.25"), rng);
    const AdjacencyView g = AdjacencyView::of(inst);
    const DynResult r = dyn_bruteforce(g, inst.tau);
    REQUIRE(r.value.is_finite());
    CHECK(static_cast<int>(r.witness.size()) == r.value.value());
    CHECK(is_dynamic_monopoly(g, inst.tau, r.witness));
    CHECK(subset_of(mandatory_vertices(g, inst.tau), r.witness));
  }
}

TEST_CASE("dyn on a forest equals the sum over its components") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.range(2, 12);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    std::vector<int> removed;
    for (int u = 0; u < n; ++u)
      if (rng.chance(0.25)) removed.push_back(u);

    // whole forest at once
    std::vector<char> gone(static_cast<size_t>(n), 0);
    for (int u : removed) gone[static_cast<size_t>(u)] = 1;
    std::vector<int> local(static_cast<size_t>(n), -1);
    int m = 0;
    Threshold sub_tau;
    for (int u = 0; u < n; ++u)
      if (!gone[static_cast<size_t>(u)]) {
        local[static_cast<size_t>(u)] = m++;
        sub_tau.push_back(inst.tau[static_cast<size_t>(u)]);
      }
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [a, b] : inst.edges)
      if (!gone[static_cast<size_t>(a)] && !gone[static_cast<size_t>(b)])
        sub_edges.emplace_back(local[static_cast<size_t>(a)],
                               local[static_cast<size_t>(b)]);
    const ExtValue whole =
        dyn_bruteforce(AdjacencyView::from_edges(m, sub_edges), sub_tau).value;

    ExtValue by_parts(0);
    for (const auto& comp : delete_vertices(inst, removed))
      by_parts = by_parts +
                 dyn_bruteforce(AdjacencyView::of(comp.instance),
                                comp.instance.tau)
                     .value;
    CHECK(whole == by_parts);
  }
}

TEST_CASE("vacc1_bruteforce is monotone in the budget") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.range(1, 7);
    const Instance inst = random_instance(
        n, ThresholdProfile::parse("mixed-inf:0.2"), rng);
    ExtValue prev = vacc1_bruteforce(inst, 0).value;
    for (int b = 1; b <= n; ++b) {
      const ExtValue cur = vacc1_bruteforce(inst, b).value;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}
