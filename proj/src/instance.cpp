#include "vacctree/instance.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>

#include <json.hpp>

namespace vacctree {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

int vertex_ref(const json& v, int n, const std::string& where) {
  std::int64_t label = 0;
  if (v.is_number_integer()) {
    label = v.get<std::int64_t>();
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), label);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      fail(where, "vertex label '" + s + "' is not an integer");
  } else {
    fail(where, "vertex label must be an integer or a string");
  }
  if (label < 0 || label >= n)
    fail(where, "vertex " + std::to_string(label) + " out of range [0," +
                    std::to_string(n) + ")");
  return static_cast<int>(label);
}

ThresholdValue threshold_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return ThresholdValue{v.get<std::int64_t>()};
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ThresholdValue::pos_inf();
    fail(where, "expected an integer or \"inf\", got '" +
                    v.get<std::string>() + "'");
  }
  fail(where, "expected an integer or \"inf\"");
}

Threshold parse_tau(const json& j, int n) {
  Threshold tau(static_cast<size_t>(n));
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n)
      fail("tau", "array has " + std::to_string(j.size()) +
                      " entries, expected " + std::to_string(n));
    for (int u = 0; u < n; ++u)
      tau[static_cast<size_t>(u)] =
          threshold_entry(j[static_cast<size_t>(u)],
                          "tau[" + std::to_string(u) + "]");
    return tau;
  }
  if (j.is_object()) {
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& [key, value] : j.items()) {
      std::int64_t label = 0;
      auto [ptr, ec] =
          std::from_chars(key.data(), key.data() + key.size(), label);
      const bool in_range =
          ec == std::errc{} && ptr == key.data() + key.size() && label >= 0 &&
          label < n;
      if (!in_range) continue;  // thresholds outside V(T) are ignored
      tau[static_cast<size_t>(label)] =
          threshold_entry(value, "tau[\"" + key + "\"]");
      covered[static_cast<size_t>(label)] = true;
    }
    for (int u = 0; u < n; ++u)
      if (!covered[static_cast<size_t>(u)])
        fail("tau", "missing entry for vertex " + std::to_string(u));
    return tau;
  }
  fail("tau", "expected an array or an object");
}

}  // namespace

void validate_instance(const Instance& inst) {
  const int n = inst.n;
  if (n < 1) fail("n", "vertex count must be at least 1");
  if (static_cast<int>(inst.tau.size()) != n)
    fail("tau", "threshold map does not cover all vertices");
  if (static_cast<int>(inst.edges.size()) != n - 1)
    fail("edges", "not a tree: " + std::to_string(inst.edges.size()) +
                      " edges on " + std::to_string(n) +
                      " vertices (need n-1)");
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < inst.edges.size(); ++i) {
    const auto where = "edges[" + std::to_string(i) + "]";
    auto [a, b] = inst.edges[i];
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(where, "vertex out of range [0," + std::to_string(n) + ")");
    if (a == b) fail(where, "self-loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      fail(where, "duplicate edge {" + std::to_string(a) + "," +
                      std::to_string(b) + "}");
  }
  // n-1 distinct edges, so connectivity is the remaining tree condition.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : inst.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<bool> visited(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  visited[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<size_t>(u)])
      if (!visited[static_cast<size_t>(v)]) {
        visited[static_cast<size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != n) fail("edges", "not a tree: graph is disconnected");
  if (inst.budget && *inst.budget < 0)
    fail("budget", "must be non-negative");
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) fail("instance", "top level must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail("n", "missing or not an integer");
  Instance inst;
  inst.n = j["n"].get<int>();
  if (inst.n < 1) fail("n", "vertex count must be at least 1");
  if (!j.contains("edges") || !j["edges"].is_array())
    fail("edges", "missing or not an array");
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    const auto where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2)
      fail(where, "expected a pair of vertices");
    inst.edges.emplace_back(vertex_ref(e[0], inst.n, where),
                            vertex_ref(e[1], inst.n, where));
  }
  if (!j.contains("tau")) fail("tau", "missing");
  inst.tau = parse_tau(j["tau"], inst.n);
  if (j.contains("budget")) {
    if (!j["budget"].is_number_integer())
      fail("budget", "expected an integer");
    inst.budget = j["budget"].get<int>();
  }
  validate_instance(inst);
  return inst;
}

Instance parse_instance(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_instance(text);
}

std::string to_json(const Instance& inst, bool pretty) {
  ordered_json j;
  j["n"] = inst.n;
  j["edges"] = ordered_json::array();
  for (auto [a, b] : inst.edges) j["edges"].push_back({a, b});
  j["tau"] = ordered_json::array();
  for (const auto& t : inst.tau) {
    if (t.is_infinite())
      j["tau"].push_back("inf");
    else
      j["tau"].push_back(t.finite_value());
  }
  if (inst.budget) j["budget"] = *inst.budget;
  return pretty ? j.dump(2) : j.dump();
}

std::vector<ForestComponent> delete_vertices(const Instance& inst,
                                             std::span<const int> removed) {
  std::vector<bool> gone(static_cast<size_t>(inst.n), false);
  for (int u : removed) gone[static_cast<size_t>(u)] = true;

  std::vector<std::vector<int>> adj(static_cast<size_t>(inst.n));
  for (auto [a, b] : inst.edges) {
    if (gone[static_cast<size_t>(a)] || gone[static_cast<size_t>(b)]) continue;
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }

  std::vector<int> component(static_cast<size_t>(inst.n), -1);
  std::vector<ForestComponent> out;
  for (int start = 0; start < inst.n; ++start) {
    if (gone[static_cast<size_t>(start)] ||
        component[static_cast<size_t>(start)] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::vector<int> stack{start};
    component[static_cast<size_t>(start)] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : adj[static_cast<size_t>(u)])
        if (component[static_cast<size_t>(v)] < 0) {
          component[static_cast<size_t>(v)] = id;
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    ForestComponent comp;
    comp.original_label = members;
    comp.instance.n = static_cast<int>(members.size());
    comp.instance.tau.reserve(members.size());
    for (int u : members)
      comp.instance.tau.push_back(inst.tau[static_cast<size_t>(u)]);
    out.push_back(std::move(comp));
  }

  std::vector<int> local(static_cast<size_t>(inst.n), -1);
  for (const auto& comp : out)
    for (size_t i = 0; i < comp.original_label.size(); ++i)
      local[static_cast<size_t>(comp.original_label[i])] =
          static_cast<int>(i);
  for (auto [a, b] : inst.edges) {
    if (gone[static_cast<size_t>(a)] || gone[static_cast<size_t>(b)]) continue;
    auto& comp = out[static_cast<size_t>(component[static_cast<size_t>(a)])];
    comp.instance.edges.emplace_back(local[static_cast<size_t>(a)],
                                     local[static_cast<size_t>(b)]);
  }
  return out;
}

}  // namespace vacctree
