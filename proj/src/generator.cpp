#include "vacctree/generator.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vacctree {

int Rng::below(int n) {
  const auto bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int>(draw % bound);
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const auto scaled = static_cast<std::uint64_t>(p * 9007199254740992.0);
  return (engine_() >> 11) < scaled;
}

std::vector<std::pair<int, int>> pruefer_decode(
    int n, std::span<const int> sequence) {
  if (n <= 1) return {};
  if (n == 2) return {{0, 1}};

  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int s : sequence) ++degree[static_cast<size_t>(s)];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  int ptr = 0;
  while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int s : sequence) {
    edges.emplace_back(leaf, s);
    if (--degree[static_cast<size_t>(s)] == 1 && s < ptr) {
      leaf = s;  // new leaf below the pointer is used immediately
    } else {
      while (degree[static_cast<size_t>(++ptr)] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);  // n-1 is never consumed as a leaf above
  return edges;
}

std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng) {
  if (n <= 1) return {};
  std::vector<int> pruefer(static_cast<size_t>(std::max(0, n - 2)));
  for (auto& s : pruefer) s = rng.below(n);
  return pruefer_decode(n, pruefer);
}

ThresholdProfile ThresholdProfile::parse(const std::string& text) {
  const auto bad = [&]() -> ThresholdProfile {
    throw std::invalid_argument(
        "unknown threshold profile '" + text +
        "' (expected const:C, uniform:LO..HI, degree-plus:D, mixed-inf:P)");
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) return bad();
  const std::string name = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  const auto parse_int = [&](const std::string& s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };

  ThresholdProfile profile;
  if (name == "const") {
    profile.kind = Kind::kConst;
    if (!parse_int(arg, profile.a)) return bad();
  } else if (name == "uniform") {
    profile.kind = Kind::kUniform;
    const auto dots = arg.find("..");
    if (dots == std::string::npos) return bad();
    if (!parse_int(arg.substr(0, dots), profile.a) ||
        !parse_int(arg.substr(dots + 2), profile.b) || profile.a > profile.b)
      return bad();
  } else if (name == "degree-plus") {
    profile.kind = Kind::kDegreePlus;
    if (!parse_int(arg, profile.a)) return bad();
  } else if (name == "mixed-inf") {
    profile.kind = Kind::kMixedInf;
    char* end = nullptr;
    profile.p = std::strtod(arg.c_str(), &end);
    if (end != arg.c_str() + arg.size() || profile.p < 0.0 || profile.p > 1.0)
      return bad();
  } else {
    return bad();
  }
  return profile;
}

Threshold sample_threshold(const ThresholdProfile& profile,
                           const AdjacencyView& g, Rng& rng) {
  const int n = g.vertex_count();
  Threshold tau(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    switch (profile.kind) {
      case ThresholdProfile::Kind::kConst:
        tau[static_cast<size_t>(u)] = ThresholdValue{profile.a};
        break;
      case ThresholdProfile::Kind::kUniform:
        tau[static_cast<size_t>(u)] = ThresholdValue{
            profile.a + rng.below(static_cast<int>(profile.b - profile.a) + 1)};
        break;
      case ThresholdProfile::Kind::kDegreePlus:
        tau[static_cast<size_t>(u)] = ThresholdValue{g.degree(u) + profile.a};
        break;
      case ThresholdProfile::Kind::kMixedInf:
        tau[static_cast<size_t>(u)] = rng.chance(profile.p)
                                          ? ThresholdValue::pos_inf()
                                          : ThresholdValue{rng.below(4)};
        break;
    }
  }
  return tau;
}

Instance random_instance(int n, const ThresholdProfile& profile, Rng& rng) {
  Instance inst;
  inst.n = n;
  inst.edges = random_tree_edges(n, rng);
  inst.tau = sample_threshold(profile, AdjacencyView::of(inst), rng);
  return inst;
}

}  // namespace vacctree
