#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "taz/dbm.hpp"

namespace taz {

// Per-clock integer bound; kNone stands for "minus infinity", i.e. the
// clock is never compared against anything. Slot 0 belongs to the
// reference clock and is fixed at 0.
class BoundVec {
 public:
  static constexpr int64_t kNone = std::numeric_limits<int64_t>::min();

  BoundVec() = default;
  explicit BoundVec(int clocks) : v_(clocks + 1, kNone) {}

  int clocks() const { return int(v_.size()) - 1; }

  int64_t get(int x) const {
    assert(x >= 0 && x < int(v_.size()));
    return x == 0 ? 0 : v_[x];
  }
  void set(int x, int64_t b) {
    assert(x >= 1 && x < int(v_.size()));
    v_[x] = b;
  }

  void raise(int x, int64_t b) {
    assert(x >= 1 && x < int(v_.size()));
    if (v_[x] < b) v_[x] = b;
  }

  // pointwise maximum
  void join(const BoundVec& o) {
    assert(v_.size() == o.v_.size());
    for (size_t i = 1; i < v_.size(); ++i)
      if (v_[i] < o.v_[i]) v_[i] = o.v_[i];
  }

  // bounds of clocks about to be reset do not matter: mask them out
  void mask(const std::vector<int>& resets) {
    for (int x : resets) {
      assert(x >= 1 && x < int(v_.size()));
      v_[x] = kNone;
    }
  }

  friend bool operator==(const BoundVec&, const BoundVec&) = default;

  std::string to_string() const;

 private:
  std::vector<int64_t> v_;
};

// lower-bound and upper-bound constants per clock; lower[x] collects
// constants of guards x > c / x >= c, upper[x] those of x < c / x <= c
struct LuBounds {
  BoundVec lower;
  BoundVec upper;

  LuBounds() = default;
  explicit LuBounds(int clocks) : lower(clocks), upper(clocks) {}

  void join(const LuBounds& o) {
    lower.join(o.lower);
    upper.join(o.upper);
  }
  void mask(const std::vector<int>& resets) {
    lower.mask(resets);
    upper.mask(resets);
  }

  // per-clock max(L, U), the single bound used by closure tests
  BoundVec max_alpha() const;

  friend bool operator==(const LuBounds&, const LuBounds&) = default;

  std::string to_string() const;
};

// bounds a parent must respect given one outgoing edge: the child's bounds
// without the reset clocks, joined with the guard's own constants (the
// guard is evaluated before the reset, so its constants are not masked)
LuBounds edge_bounds(const ClockGuard& g, const std::vector<int>& resets,
                     const LuBounds& child);

}  // namespace taz
