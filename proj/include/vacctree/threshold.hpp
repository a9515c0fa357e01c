#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vacctree {

// Activation requirement in Z u {+inf}. A vertex joins the spreading process
// once at least this many of its neighbors are active; +inf can never be met,
// which forces the vertex into every dynamic monopoly.
class ThresholdValue {
 public:
  constexpr ThresholdValue() = default;  // 0
  constexpr ThresholdValue(std::int64_t v) : infinite_(false), value_(v) {}

  static constexpr ThresholdValue pos_inf() {
    ThresholdValue t;
    t.infinite_ = true;
    return t;
  }

  constexpr bool is_infinite() const { return infinite_; }

  // Only meaningful when finite.
  constexpr std::int64_t finite_value() const { return value_; }

  // tau(u) <= bound; false for +inf.
  constexpr bool at_most(std::int64_t bound) const {
    return !infinite_ && value_ <= bound;
  }

  // tau(u) > bound; true for +inf.
  constexpr bool exceeds(std::int64_t bound) const { return !at_most(bound); }

  // tau(u) - 1 with +inf absorbing.
  constexpr ThresholdValue decremented() const {
    return infinite_ ? *this : ThresholdValue{value_ - 1};
  }

  friend constexpr bool operator==(const ThresholdValue&,
                                   const ThresholdValue&) = default;

  std::string to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

 private:
  bool infinite_ = false;
  std::int64_t value_ = 0;  // 0 when infinite so defaulted == is sound
};

// Per-vertex threshold map over vertices 0..n-1.
using Threshold = std::vector<ThresholdValue>;

// tau_X: +inf on X, unchanged elsewhere. Input is not modified.
inline Threshold immunize(const Threshold& tau, std::span<const int> x) {
  Threshold out = tau;
  for (int u : x) out[static_cast<size_t>(u)] = ThresholdValue::pos_inf();
  return out;
}

// tau^u: entry u lowered by one, +inf absorbing. Input is not modified.
inline Threshold decrement_at(const Threshold& tau, int u) {
  Threshold out = tau;
  out[static_cast<size_t>(u)] = out[static_cast<size_t>(u)].decremented();
  return out;
}

}  // namespace vacctree
