#pragma once

#include <compare>
#include <string>

namespace vacctree {

// Solver value in Z u {-inf}. -inf marks infeasible states: it absorbs
// addition and loses every comparison, so "max over an empty set" is
// ExtValue::neg_inf() and infeasible branches never win a maximum.
class ExtValue {
 public:
  constexpr ExtValue() = default;  // -inf
  constexpr ExtValue(int v) : finite_(true), value_(v) {}

  static constexpr ExtValue neg_inf() { return ExtValue{}; }

  constexpr bool is_finite() const { return finite_; }

  // Only meaningful when finite.
  constexpr int value() const { return value_; }

  friend constexpr ExtValue operator+(ExtValue a, ExtValue b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtValue{a.value_ + b.value_};
  }

  friend constexpr bool operator==(const ExtValue&, const ExtValue&) = default;

  // -inf orders below every finite value.
  friend constexpr std::strong_ordering operator<=>(ExtValue a, ExtValue b) {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("-inf");
  }

 private:
  bool finite_ = false;
  int value_ = 0;  // kept at 0 for -inf so defaulted == is sound
};

}  // namespace vacctree
