#include "taz/approx.hpp"

#include <cassert>

namespace taz {

Dbm extra_lu_plus(const Dbm& z, const LuBounds& lu) {
  assert(z.canonical() && !z.is_empty());
  assert(lu.lower.clocks() == z.clocks() && lu.upper.clocks() == z.clocks());
  const auto above = [](Weight w, int64_t bound) {
    // w > (<=, bound), where bound may be -infinity
    return bound == BoundVec::kNone || w > Weight::le(bound);
  };
  Dbm r = z;
  for (int x = 0; x < z.dim(); ++x) {
    // (x, 0) can be infinite when z is itself an extrapolation that
    // dropped the lower bound; a clock with minimum -infinity then
    // exceeds no bound, so the two lower-bound rules stay silent
    assert(x == 0 || z.at(x, 0) <= Weight::le(0) || z.at(x, 0).is_inf());
    for (int y = 0; y < z.dim(); ++y) {
      if (x == y) continue;
      const int64_t ly = lu.lower.get(y);
      const int64_t ux = lu.upper.get(x);
      Weight w = z.at(x, y);
      if (above(z.at(x, y), ly)) {
        w = Weight::inf();
      } else if (!z.at(y, 0).is_inf() && above(z.at(y, 0).negated(), ly)) {
        w = Weight::inf();
      } else if (!z.at(x, 0).is_inf() && above(z.at(x, 0).negated(), ux)) {
        w = (y != 0) ? Weight::inf()
                     : (ux == BoundVec::kNone ? Weight::inf()
                                              : Weight::lt(-ux));
      }
      r.set(x, y, w);
    }
  }
  return r;
}

// ── closure inclusion, decided entrywise ────────────────────────────────

namespace {

// Z not included in the closure of Z' iff some clock x (and for the third
// disjunct a second clock y) satisfies:
//   1. Z'_0x < Z_0x and Z'_0x <= (<=, a_x)
//   2. Z'_x0 < Z_x0 and Z_x0 >= (<=, -a_x)
//   3. Z_x0 >= (<=, -a_x) and Z'_xy < Z_xy and
//      Z'_xy <= (<=, a_y) + floor(Z_x0)
// A clock with a_x = -infinity satisfies neither gate.
ClosureWitness nic_core(const Dbm& z, const Dbm& zp, const BoundVec& alpha) {
  const int k = z.clocks();
  assert(zp.clocks() == k && alpha.clocks() == k);
  ClosureWitness w;
  for (int x = 1; x <= k; ++x) {
    const int64_t ax = alpha.get(x);
    if (ax == BoundVec::kNone) continue;
    if (zp.at(0, x) < z.at(0, x) && zp.at(0, x) <= Weight::le(ax)) {
      w.not_included = true;
      w.x = x;
      w.cond = 1;
      return w;
    }
    const Weight zx0 = z.at(x, 0);
    if (zx0 < Weight::le(-ax)) continue;  // gate of conditions 2 and 3
    if (zp.at(x, 0) < zx0) {
      w.not_included = true;
      w.x = x;
      w.cond = 2;
      return w;
    }
    assert(!zx0.is_inf());
    const Weight fx0 = zx0.floor();
    for (int y = 1; y <= k; ++y) {
      if (y == x) continue;
      const int64_t ay = alpha.get(y);
      if (ay == BoundVec::kNone) continue;
      if (zp.at(x, y) < z.at(x, y) &&
          zp.at(x, y) <= Weight::le(ay) + fx0) {
        w.not_included = true;
        w.x = x;
        w.y = y;
        w.cond = 3;
        return w;
      }
    }
  }
  return w;
}

}  // namespace

ClosureWitness not_included_closure_witness(const Dbm& z, const Dbm& z2,
                                            const BoundVec& alpha) {
  assert(z.canonical() && z2.canonical());
  ClosureWitness none;
  if (z.is_empty()) return none;
  if (z2.is_empty()) {
    none.not_included = true;
    return none;
  }
  return nic_core(z, z2, alpha);
}

bool not_included_closure(const Dbm& z, const Dbm& z2, const BoundVec& alpha) {
  return not_included_closure_witness(z, z2, alpha).not_included;
}

ClosureWitness not_included_closure_lu_witness(const Dbm& z,
                                               const Dbm& z2plus,
                                               const BoundVec& alpha) {
  assert(z.canonical());
  ClosureWitness none;
  if (z.is_empty()) return none;
  return nic_core(z, z2plus, alpha);
}

bool not_included_closure_lu(const Dbm& z, const Dbm& z2plus,
                             const BoundVec& alpha) {
  return not_included_closure_lu_witness(z, z2plus, alpha).not_included;
}

bool included_closure(const Dbm& z, const Dbm& z2, const BoundVec& alpha) {
  return !not_included_closure(z, z2, alpha);
}

bool included_closure_lu(const Dbm& z, const Dbm& z2plus,
                         const BoundVec& alpha) {
  return !not_included_closure_lu(z, z2plus, alpha);
}

}  // namespace taz
