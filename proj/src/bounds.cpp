#include "taz/bounds.hpp"

#include <sstream>

namespace taz {

std::string BoundVec::to_string() const {
  std::ostringstream out;
  out << '{';
  for (int x = 1; x <= clocks(); ++x) {
    if (x > 1) out << ',';
    if (v_[x] == kNone) out << "-inf";
    else out << v_[x];
  }
  out << '}';
  return out.str();
}

BoundVec LuBounds::max_alpha() const {
  BoundVec a(lower.clocks());
  for (int x = 1; x <= lower.clocks(); ++x) {
    const int64_t l = lower.get(x), u = upper.get(x);
    if (l == BoundVec::kNone && u == BoundVec::kNone) continue;
    if (l == BoundVec::kNone) a.set(x, u);
    else if (u == BoundVec::kNone) a.set(x, l);
    else a.set(x, l > u ? l : u);
  }
  return a;
}

std::string LuBounds::to_string() const {
  return "L" + lower.to_string() + " U" + upper.to_string();
}

LuBounds edge_bounds(const ClockGuard& g, const std::vector<int>& resets,
                     const LuBounds& child) {
  LuBounds b = child;
  b.mask(resets);
  for (const ClockConstraint& c : g) {
    switch (c.op) {
      case CmpOp::lt:
      case CmpOp::le:
        b.upper.raise(c.clock, c.bound);
        break;
      case CmpOp::ge:
      case CmpOp::gt:
        b.lower.raise(c.clock, c.bound);
        break;
      case CmpOp::eq:
        b.lower.raise(c.clock, c.bound);
        b.upper.raise(c.clock, c.bound);
        break;
    }
  }
  return b;
}

}  // namespace taz
