#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vacctree/threshold.hpp"

namespace vacctree {

// Raised for malformed or invalid instance input; the message carries the
// offending location (byte offset or field path).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A labeled tree with per-vertex thresholds and an optional budget. Vertices
// are dense integers 0..n-1; edge order is preserved from the input so the
// canonical JSON form round-trips byte for byte.
struct Instance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  Threshold tau;
  std::optional<int> budget;
};

// Throws ParseError unless the edge set is a tree on 0..n-1 (exactly n-1
// edges, no self-loops or duplicates, connected), tau covers every vertex,
// and the budget, when present, is non-negative.
void validate_instance(const Instance& inst);

// Parses the canonical JSON instance form:
//   {"n": int, "edges": [[int,int],...], "tau": [int|"inf", ...],
//    "budget": int?}
// Vertex references may be integers or decimal strings. "tau" may instead be
// an object keyed by vertex labels; keys outside 0..n-1 are ignored.
Instance parse_instance(const std::string& text);
Instance parse_instance(std::istream& in);

// Canonical serialization; parse_instance(to_json(i)) round-trips exactly.
std::string to_json(const Instance& inst, bool pretty = false);

// One tree of the forest left after deleting vertices, relabeled to
// 0..n'-1 with the map back to the original labels.
struct ForestComponent {
  Instance instance;
  std::vector<int> original_label;
};

// Induced forest T - Y as components in ascending order of their smallest
// original label; vertices inside a component keep their relative order.
// Thresholds carry over unchanged; deleting everything yields an empty list.
std::vector<ForestComponent> delete_vertices(const Instance& inst,
                                             std::span<const int> removed);

}  // namespace vacctree
