#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace taz {

// Weight of a distance-graph edge x -> y: the constraint y - x <= c (weak)
// or y - x < c (strict). The order compares values first and breaks ties
// with strict before weak, so "smaller" always means "tighter".
//
// (<, infinity) is the unique infinite weight; a weak infinity cannot be
// constructed. Finite values stay far below kInfValue (guard constants are
// at most ~1e6 and path sums add at most a few dozen of them), so finite
// sums never collide with the sentinel.
class Weight {
 public:
  static constexpr int64_t kInfValue = std::numeric_limits<int64_t>::max() / 2;

  // default: (<=, 0), the weight of a self loop
  constexpr Weight() : value_(0), strict_(false) {}

  static constexpr Weight le(int64_t c) {
    assert(c > -kInfValue && c < kInfValue);
    return Weight(c, false);
  }
  static constexpr Weight lt(int64_t c) {
    assert(c > -kInfValue && c <= kInfValue);
    return Weight(c, true);
  }
  static constexpr Weight inf() { return Weight(kInfValue, true); }

  constexpr int64_t value() const { return value_; }
  constexpr bool strict() const { return strict_; }
  constexpr bool is_inf() const { return value_ == kInfValue; }

  // values add, infinity absorbs, strictness ors
  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return Weight(a.value_ + b.value_, a.strict_ || b.strict_);
  }

  // -(<= c) = (<= -c), -(< c) = (< -c); finite only
  constexpr Weight negated() const {
    assert(!is_inf());
    return Weight(-value_, strict_);
  }

  // largest weight of the form (<=, n) strictly below this one:
  // floor(<, c) = (<=, c-1), floor(<=, c) = (<=, c); finite only
  constexpr Weight floor() const {
    assert(!is_inf());
    return Weight(strict_ ? value_ - 1 : value_, false);
  }

  // smallest weight with integer value not below this one:
  // ceil(<=, c) = (<=, c), ceil(<, c) = (<, c+1); finite only
  constexpr Weight ceil() const {
    assert(!is_inf());
    return strict_ ? Weight(value_ + 1, true) : Weight(value_, false);
  }

  friend constexpr bool operator==(Weight a, Weight b) {
    return a.value_ == b.value_ && a.strict_ == b.strict_;
  }
  // (<, c) sorts below (<=, c)
  friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) {
    if (a.value_ != b.value_) return a.value_ <=> b.value_;
    return (a.strict_ ? 0 : 1) <=> (b.strict_ ? 0 : 1);
  }

  std::string to_string() const {
    if (is_inf()) return "(<,inf)";
    return std::string(strict_ ? "(<," : "(<=,") + std::to_string(value_) + ")";
  }

 private:
  constexpr Weight(int64_t v, bool s) : value_(v), strict_(s) {}

  int64_t value_;
  bool strict_;
};

inline constexpr Weight weight_min(Weight a, Weight b) { return a < b ? a : b; }
inline constexpr Weight weight_max(Weight a, Weight b) { return a < b ? b : a; }

}  // namespace taz
