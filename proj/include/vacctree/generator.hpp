#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vacctree/instance.hpp"
#include "vacctree/percolation.hpp"

namespace vacctree {

// Seeded RNG with hand-rolled draws so the same seed produces the same bytes
// on every platform (mt19937_64 is fully specified; the std distributions
// are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n >= 1; rejection sampling keeps it unbiased.
  int below(int n);

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // True with probability p (53-bit fixed point).
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

// Decodes a Pruefer sequence of length n-2 over [0, n) into the n-1 edges of
// the labeled tree it encodes (empty sequence for n <= 2).
std::vector<std::pair<int, int>> pruefer_decode(int n,
                                                std::span<const int> sequence);

// Uniform random labeled tree via a random Pruefer sequence: n-2 draws in
// [0, n) decoded to edges. n = 1 has no edges; n = 2 is the single edge.
std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng);

// Threshold profiles accepted by the generator:
//   const:C         every vertex C
//   uniform:LO..HI  uniform integer in [LO, HI]
//   degree-plus:D   deg(u) + D
//   mixed-inf:P     +inf with probability P, else uniform in {0,1,2,3}
struct ThresholdProfile {
  enum class Kind { kConst, kUniform, kDegreePlus, kMixedInf };
  Kind kind = Kind::kConst;
  std::int64_t a = 1, b = 1;  // const value / lo..hi / degree offset
  double p = 0.0;

  // Throws std::invalid_argument on an unknown profile string.
  static ThresholdProfile parse(const std::string& text);
};

Threshold sample_threshold(const ThresholdProfile& profile,
                           const AdjacencyView& g, Rng& rng);

// Random tree plus sampled thresholds; no budget.
Instance random_instance(int n, const ThresholdProfile& profile, Rng& rng);

}  // namespace vacctree
