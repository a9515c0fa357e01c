#include "vacctree/percolation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vacctree {

namespace {

// Worklist percolation into caller-owned scratch; returns the number of
// active vertices. Keeps the oracles below allocation-free per candidate.
int percolate(const AdjacencyView& g, const Threshold& tau,
              std::span<const int> seeds, std::vector<char>& active,
              std::vector<int>& count, std::vector<int>& queue) {
  const int n = g.vertex_count();
  active.assign(static_cast<size_t>(n), 0);
  count.assign(static_cast<size_t>(n), 0);
  queue.clear();
  int reached = 0;
  auto activate = [&](int u) {
    if (active[static_cast<size_t>(u)]) return;
    active[static_cast<size_t>(u)] = 1;
    ++reached;
    queue.push_back(u);
  };
  for (int u : seeds) activate(u);
  for (int u = 0; u < n; ++u)
    if (tau[static_cast<size_t>(u)].at_most(0)) activate(u);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (active[static_cast<size_t>(v)]) continue;
      const int c = ++count[static_cast<size_t>(v)];
      if (tau[static_cast<size_t>(v)].at_most(c)) activate(v);
    }
  }
  return reached;
}

// Calls fn for every k-subset of items in lexicographic order until fn
// returns true; reports whether any call did.
template <typename F>
bool for_each_combination(std::span<const int> items, int k, F&& fn) {
  const int m = static_cast<int>(items.size());
  if (k > m) return false;
  std::vector<int> pick(static_cast<size_t>(k));
  std::vector<int> subset(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<size_t>(i)] = items[static_cast<size_t>(
          pick[static_cast<size_t>(i)])];
    if (fn(std::span<const int>(subset))) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

void check_guard(const char* what, int n, int max_n) {
  if (n > max_n)
    throw SizeGuardError(std::string(what) + ": instance has " +
                         std::to_string(n) + " vertices, guard is " +
                         std::to_string(max_n) +
                         " (raise max_n to override)");
}

}  // namespace

AdjacencyView AdjacencyView::from_edges(
    int n, std::span<const std::pair<int, int>> edges) {
  AdjacencyView g;
  g.adj_.assign(static_cast<size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("edge endpoint out of range [0," + std::to_string(n) +
                       ")");
    if (a == b)
      throw ParseError("self-loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw ParseError("duplicate edge {" + std::to_string(a) + "," +
                       std::to_string(b) + "}");
    g.adj_[static_cast<size_t>(a)].push_back(b);
    g.adj_[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

AdjacencyView AdjacencyView::of(const Instance& inst) {
  return from_edges(inst.n, inst.edges);
}

std::vector<int> hull(const AdjacencyView& g, const Threshold& tau,
                      std::span<const int> seeds) {
  const int n = g.vertex_count();
  for (int u : seeds)
    if (u < 0 || u >= n)
      throw ParseError("seed vertex " + std::to_string(u) +
                       " out of range [0," + std::to_string(n) + ")");
  std::vector<char> active;
  std::vector<int> count, queue;
  percolate(g, tau, seeds, active, count, queue);
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (active[static_cast<size_t>(u)]) out.push_back(u);
  return out;
}

bool is_dynamic_monopoly(const AdjacencyView& g, const Threshold& tau,
                         std::span<const int> seeds) {
  const int n = g.vertex_count();
  for (int u : seeds)
    if (u < 0 || u >= n)
      throw ParseError("seed vertex " + std::to_string(u) +
                       " out of range [0," + std::to_string(n) + ")");
  std::vector<char> active;
  std::vector<int> count, queue;
  return percolate(g, tau, seeds, active, count, queue) == n;
}

std::vector<int> mandatory_vertices(const AdjacencyView& g,
                                    const Threshold& tau) {
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (tau[static_cast<size_t>(u)].exceeds(g.degree(u))) out.push_back(u);
  return out;
}

DynResult dyn_bruteforce(const AdjacencyView& g, const Threshold& tau,
                         int max_n) {
  const int n = g.vertex_count();
  check_guard("dyn_bruteforce", n, max_n);

  const std::vector<int> mandatory = mandatory_vertices(g, tau);
  std::vector<char> in_mandatory(static_cast<size_t>(n), 0);
  for (int u : mandatory) in_mandatory[static_cast<size_t>(u)] = 1;
  std::vector<int> free_vertices;
  for (int u = 0; u < n; ++u)
    if (!in_mandatory[static_cast<size_t>(u)]) free_vertices.push_back(u);

  std::vector<char> active;
  std::vector<int> count, queue, candidate;
  auto is_monopoly = [&](std::span<const int> seeds) {
    return percolate(g, tau, seeds, active, count, queue) == n;
  };

  // Every monopoly contains the mandatory vertices, and merging a fixed set
  // into same-size subsets preserves lexicographic order, so enumerating the
  // free part in lexicographic order yields the canonical witness.
  DynResult result;
  for (int extra = 0; extra <= static_cast<int>(free_vertices.size());
       ++extra) {
    const bool found = for_each_combination(
        free_vertices, extra, [&](std::span<const int> combo) {
          candidate.assign(mandatory.begin(), mandatory.end());
          candidate.insert(candidate.end(), combo.begin(), combo.end());
          std::sort(candidate.begin(), candidate.end());
          if (!is_monopoly(candidate)) return false;
          result.value = ExtValue(static_cast<int>(candidate.size()));
          result.witness = candidate;
          return true;
        });
    if (found) return result;
  }
  // D = V is always a monopoly, so the loop above cannot fall through.
  result.value = ExtValue(n);
  for (int u = 0; u < n; ++u) result.witness.push_back(u);
  return result;
}

VaccResult vacc1_bruteforce(const Instance& inst, int b, int max_n) {
  check_guard("vacc1_bruteforce", inst.n, max_n);
  if (b > inst.n) return {ExtValue::neg_inf(), {}};

  const AdjacencyView g = AdjacencyView::of(inst);
  std::vector<int> all(static_cast<size_t>(inst.n));
  for (int u = 0; u < inst.n; ++u) all[static_cast<size_t>(u)] = u;

  VaccResult best;
  for_each_combination(all, b, [&](std::span<const int> x) {
    const ExtValue v = dyn_bruteforce(g, immunize(inst.tau, x), max_n).value;
    if (!best.value.is_finite() || v > best.value) {
      best.value = v;
      best.witness.assign(x.begin(), x.end());
    }
    return false;
  });
  return best;
}

VaccResult vacc2_bruteforce(const Instance& inst, int b, int max_n) {
  check_guard("vacc2_bruteforce", inst.n, max_n);
  if (b > inst.n) return {ExtValue::neg_inf(), {}};

  const AdjacencyView g = AdjacencyView::of(inst);
  std::vector<int> all(static_cast<size_t>(inst.n));
  for (int u = 0; u < inst.n; ++u) all[static_cast<size_t>(u)] = u;

  VaccResult best;
  std::vector<int> local(static_cast<size_t>(inst.n));
  for_each_combination(all, b, [&](std::span<const int> y) {
    // Induced forest T - Y, relabeled to 0..m-1.
    std::vector<char> gone(static_cast<size_t>(inst.n), 0);
    for (int u : y) gone[static_cast<size_t>(u)] = 1;
    int m = 0;
    Threshold sub_tau;
    for (int u = 0; u < inst.n; ++u)
      if (!gone[static_cast<size_t>(u)]) {
        local[static_cast<size_t>(u)] = m++;
        sub_tau.push_back(inst.tau[static_cast<size_t>(u)]);
      }
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [a, b2] : inst.edges)
      if (!gone[static_cast<size_t>(a)] && !gone[static_cast<size_t>(b2)])
        sub_edges.emplace_back(local[static_cast<size_t>(a)],
                               local[static_cast<size_t>(b2)]);
    const AdjacencyView sub = AdjacencyView::from_edges(m, sub_edges);
    const ExtValue v = dyn_bruteforce(sub, sub_tau, max_n).value;
    if (!best.value.is_finite() || v > best.value) {
      best.value = v;
      best.witness.assign(y.begin(), y.end());
    }
    return false;
  });
  return best;
}

}  // namespace vacctree
