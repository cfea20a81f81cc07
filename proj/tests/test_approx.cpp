#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "taz/approx.hpp"
#include "taz/region.hpp"

using namespace taz;

namespace {

constexpr int64_t kN = BoundVec::kNone;

LuBounds lu1(int64_t l, int64_t u) {
  LuBounds b(1);
  if (l != kN) b.lower.set(1, l);
  if (u != kN) b.upper.set(1, u);
  return b;
}

LuBounds lu2(int64_t l1, int64_t u1, int64_t l2, int64_t u2) {
  LuBounds b(2);
  if (l1 != kN) b.lower.set(1, l1);
  if (u1 != kN) b.upper.set(1, u1);
  if (l2 != kN) b.lower.set(2, l2);
  if (u2 != kN) b.upper.set(2, u2);
  return b;
}

Dbm canon(Dbm z) {
  z.canonicalize();
  return z;
}

Dbm random_zone(std::mt19937& rng) {
  std::uniform_int_distribution<int> steps(1, 3);
  std::uniform_int_distribution<int> nguards(0, 2);
  std::uniform_int_distribution<int> clock(1, 2);
  std::uniform_int_distribution<int> opd(0, 4);
  std::uniform_int_distribution<int> bound(0, 3);
  std::uniform_int_distribution<int> rmask(0, 3);
  for (;;) {
    Dbm z = Dbm::zero(2);
    const int n = steps(rng);
    bool dead = false;
    for (int s = 0; s < n && !dead; ++s) {
      ClockGuard g;
      const int ng = nguards(rng);
      for (int i = 0; i < ng; ++i)
        g.push_back({clock(rng), static_cast<CmpOp>(opd(rng)), bound(rng)});
      std::vector<int> resets;
      const int rm = rmask(rng);
      for (int x = 1; x <= 2; ++x)
        if (rm & (1 << (x - 1))) resets.push_back(x);
      Dbm nz = zone_successor(z, g, resets);
      if (nz.is_empty())
        dead = true;
      else
        z = std::move(nz);
    }
    if (!dead) return z;
  }
}

}  // namespace

// ── extrapolation, rule by rule ──────────────────────────────────────────

TEST_CASE("upper bounds above the lower-bound constant are dropped") {
  const Dbm z = intersect_guard(Dbm::universe(1), {{1, CmpOp::le, 5}});
  const Dbm r = extra_lu_plus(z, lu1(3, 10));
  CHECK(r.at(0, 1).is_inf());
  CHECK(r.at(1, 0) == Weight::le(0));
}

TEST_CASE("edges into a clock whose lower bound exceeds L are dropped") {
  Dbm z = Dbm::universe(2);
  z.set(0, 2, Weight::le(9));
  z.set(2, 0, Weight::le(-4));  // y >= 4
  z.set(1, 2, Weight::le(1));
  z.canonicalize();
  REQUIRE(z.at(1, 0) == Weight::le(-3));  // x >= 3 follows

  const Dbm r = extra_lu_plus(z, lu2(10, 10, 2, 10));  // L_y = 2 < 4
  CHECK(r.at(1, 2).is_inf());
  CHECK(r.at(0, 2).is_inf());
  CHECK(r.at(1, 0) == Weight::le(-3));
  CHECK(r.at(2, 0) == Weight::le(-4));
}

TEST_CASE("edges out of a clock far above its upper bound are dropped") {
  Dbm z = Dbm::universe(2);
  z.set(1, 0, Weight::le(-5));  // x >= 5
  z.set(1, 2, Weight::le(2));
  z.canonicalize();

  const Dbm r = extra_lu_plus(z, lu2(10, 3, 10, 10));  // U_x = 3 < 5
  CHECK(r.at(1, 2).is_inf());
  CHECK(r.at(1, 0) == Weight::lt(-3));  // lower bound relaxed to x > U_x
}

TEST_CASE("lower bounds relax to the upper-bound constant") {
  const Dbm z = intersect_guard(Dbm::universe(1), {{1, CmpOp::ge, 3}});
  const Dbm r = extra_lu_plus(z, lu1(7, 1));
  CHECK(r.at(0, 1).is_inf());
  CHECK(r.at(1, 0) == Weight::lt(-1));

  // a clock that is never bounded from above loses its lower bound entirely
  const Dbm s = extra_lu_plus(z, lu1(7, kN));
  CHECK(s.at(1, 0).is_inf());
}

TEST_CASE("zones below both bounds pass through unchanged") {
  const Dbm z = canon(intersect_guard(
      Dbm::universe(2), {{1, CmpOp::le, 2}, {2, CmpOp::ge, 1}}));
  const Dbm r = extra_lu_plus(z, lu2(5, 5, 5, 5));
  CHECK(r == z);
}

TEST_CASE("a zone is included in its canonicalized extrapolation") {
  std::mt19937 rng(3);
  const int64_t pool[] = {kN, 0, 1, 2, 3};
  std::uniform_int_distribution<int> pick(0, 4);
  for (int t = 0; t < 200; ++t) {
    const Dbm z = random_zone(rng);
    const LuBounds lu = lu2(pool[pick(rng)], pool[pick(rng)],
                            pool[pick(rng)], pool[pick(rng)]);
    Dbm zp = extra_lu_plus(z, lu);
    zp.canonicalize();
    REQUIRE_FALSE(zp.is_empty());
    CHECK(dbm_included(z, zp));
  }
}

// ── the entrywise closure-inclusion test against enumeration ─────────────

TEST_CASE("closure inclusion: witness conditions on hand cases") {
  BoundVec alpha(1);
  alpha.set(1, 2);
  const Dbm p5 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 5}});
  const Dbm p1 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 1}});

  ClosureWitness w = not_included_closure_witness(p5, p1, alpha);
  CHECK(w.not_included);
  CHECK(w.cond == 1);
  CHECK(w.x == 1);

  w = not_included_closure_witness(p1, p5, alpha);
  CHECK(w.not_included);
  CHECK(w.cond == 2);

  // same projections, different diagonal: only condition 3 can see it
  BoundVec a11(2);
  a11.set(1, 1);
  a11.set(2, 1);
  const Dbm square = canon(intersect_guard(
      Dbm::universe(2), {{1, CmpOp::le, 1}, {2, CmpOp::le, 1}}));
  Dbm tri = square;
  tri.set(1, 2, Weight::le(0));  // y <= x
  tri.canonicalize();
  w = not_included_closure_witness(square, tri, a11);
  CHECK(w.not_included);
  CHECK(w.cond == 3);
  CHECK_FALSE(closure_inclusion(square, tri, a11));
  CHECK(closure_inclusion(tri, square, a11));
  CHECK_FALSE(not_included_closure(tri, square, a11));
}

TEST_CASE("closure inclusion of empty zones") {
  BoundVec alpha(2);
  alpha.set(1, 2);
  alpha.set(2, 2);
  const Dbm z = canon(intersect_guard(Dbm::universe(2), {{1, CmpOp::le, 1}}));
  Dbm empty = intersect_guard(z, {{1, CmpOp::ge, 2}});
  REQUIRE(empty.is_empty());

  CHECK_FALSE(not_included_closure(empty, z, alpha));
  CHECK(not_included_closure(z, empty, alpha));
  CHECK_FALSE(not_included_closure(empty, empty, alpha));
  CHECK(included_closure(empty, z, alpha));
}

TEST_CASE("entrywise test equals enumeration on random pairs") {
  std::mt19937 rng(17);
  const int64_t vals[] = {kN, 0, 1, 2, 3};
  std::uniform_int_distribution<int> pick(0, 4);
  int included = 0, excluded = 0;
  for (int t = 0; t < 250; ++t) {
    const Dbm z1 = random_zone(rng);
    const Dbm z2 = random_zone(rng);
    BoundVec alpha(2);
    for (int x = 1; x <= 2; ++x) {
      const int64_t v = vals[pick(rng)];
      if (v != kN) alpha.set(x, v);
    }
    const bool fast = not_included_closure(z1, z2, alpha);
    const bool oracle = !closure_inclusion(z1, z2, alpha);
    CHECK(fast == oracle);
    (fast ? excluded : included)++;
  }
  CHECK(included > 20);
  CHECK(excluded > 20);
}

TEST_CASE("raw-extrapolation test equals canonicalize-then-test") {
  std::mt19937 rng(23);
  const int64_t vals[] = {kN, 0, 1, 2, 3};
  std::uniform_int_distribution<int> pick(0, 4);
  int included = 0, excluded = 0;
  for (int t = 0; t < 250; ++t) {
    const Dbm z1 = random_zone(rng);
    const Dbm z2 = random_zone(rng);
    const LuBounds lu = lu2(vals[pick(rng)], vals[pick(rng)],
                            vals[pick(rng)], vals[pick(rng)]);
    const BoundVec alpha = lu.max_alpha();

    const Dbm z2p = extra_lu_plus(z2, lu);
    Dbm z2c = z2p;
    z2c.canonicalize();
    REQUIRE_FALSE(z2c.is_empty());

    const bool raw = not_included_closure_lu(z1, z2p, alpha);
    const bool viaCanon = not_included_closure(z1, z2c, alpha);
    const bool oracle = !closure_inclusion(z1, z2c, alpha);
    CHECK(raw == oracle);
    CHECK(viaCanon == oracle);
    (raw ? excluded : included)++;
  }
  CHECK(included > 20);
  CHECK(excluded > 20);
}

// ── extrapolation against the sampled simulation preorder ────────────────

TEST_CASE("extrapolated points are simulated by zone points") {
  std::mt19937 rng(29);
  const int64_t vals[] = {kN, 0, 1, 2, 3};
  std::uniform_int_distribution<int> pick(0, 4);
  for (int t = 0; t < 60; ++t) {
    const Dbm z = random_zone(rng);
    const LuBounds lu = lu2(vals[pick(rng)], vals[pick(rng)],
                            vals[pick(rng)], vals[pick(rng)]);
    Dbm zp = extra_lu_plus(z, lu);
    zp.canonicalize();
    for (int64_t hx = 0; hx <= 14; ++hx)
      for (int64_t hy = 0; hy <= 14; ++hy) {
        const HalfVal v = {0, hx, hy};
        if (!dbm_contains(zp, v)) continue;
        CHECK(sampled_alu_membership(z, v, lu));
      }
  }
}
