#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vacctree/ext_value.hpp"
#include "vacctree/instance.hpp"
#include "vacctree/threshold.hpp"

namespace vacctree {

// Raised when a brute-force oracle is asked for more vertices than its guard
// allows; raise the cap explicitly to accept the exponential cost.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDynGuard = 20;
inline constexpr int kDefaultVaccGuard = 12;

// Symmetric neighbor lists for an arbitrary simple graph or forest; the
// spreading engine below needs nothing tree-specific.
class AdjacencyView {
 public:
  AdjacencyView() = default;

  // Throws ParseError on self-loops, duplicates, or out-of-range endpoints.
  static AdjacencyView from_edges(int n,
                                  std::span<const std::pair<int, int>> edges);
  static AdjacencyView of(const Instance& inst);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int degree(int u) const {
    return static_cast<int>(adj_[static_cast<size_t>(u)].size());
  }
  std::span<const int> neighbors(int u) const {
    return adj_[static_cast<size_t>(u)];
  }

 private:
  std::vector<std::vector<int>> adj_;
};

// The hull of the seed set: the fixed point of iteratively activating every
// vertex u with at least tau(u) active neighbors. Vertices with tau(u) <= 0
// activate unconditionally. Returns a sorted vertex list containing seeds.
std::vector<int> hull(const AdjacencyView& g, const Threshold& tau,
                      std::span<const int> seeds);

// True iff the hull of seeds covers every vertex.
bool is_dynamic_monopoly(const AdjacencyView& g, const Threshold& tau,
                         std::span<const int> seeds);

// Vertices with tau(u) > deg(u) (including +inf): these belong to every
// dynamic monopoly. Sorted.
std::vector<int> mandatory_vertices(const AdjacencyView& g,
                                    const Threshold& tau);

struct DynResult {
  ExtValue value;
  std::vector<int> witness;  // sorted; empty when value is -inf
};

// Minimum dynamic monopoly by exhaustive search: candidates are enumerated by
// increasing cardinality, then lexicographically, and every candidate
// contains the mandatory vertices, so the first hit is the canonical
// minimizer. Works on forests and general graphs.
DynResult dyn_bruteforce(const AdjacencyView& g, const Threshold& tau,
                         int max_n = kDefaultDynGuard);

struct VaccResult {
  ExtValue value;
  std::vector<int> witness;
};

// max over |X| = b of dyn(G, tau_X); -inf when b > n. The witness is the
// lexicographically smallest maximizing X.
VaccResult vacc1_bruteforce(const Instance& inst, int b,
                            int max_n = kDefaultVaccGuard);

// max over |Y| = b of dyn(T - Y, tau); -inf when b > n. The witness is the
// lexicographically smallest maximizing Y.
VaccResult vacc2_bruteforce(const Instance& inst, int b,
                            int max_n = kDefaultVaccGuard);

}  // namespace vacctree
